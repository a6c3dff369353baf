int indef_stub_rk45_;
