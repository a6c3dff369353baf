int indef_stub_iss_;
