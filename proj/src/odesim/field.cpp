int indef_stub_field_;
