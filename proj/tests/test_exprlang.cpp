int indef_stub_test_exprlang_;
