int indef_stub_drift_;
