int indef_stub_test_gronwall_;
