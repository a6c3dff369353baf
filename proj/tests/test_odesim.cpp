int indef_stub_test_odesim_;
