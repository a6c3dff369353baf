int indef_stub_csv_;
