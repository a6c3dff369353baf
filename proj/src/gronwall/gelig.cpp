int indef_stub_gelig_;
