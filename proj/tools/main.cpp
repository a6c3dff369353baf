int indef_stub_main_;
