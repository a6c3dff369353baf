int indef_stub_catalog_;
