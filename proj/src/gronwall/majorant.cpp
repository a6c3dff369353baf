int indef_stub_majorant_;
