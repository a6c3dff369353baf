int indef_stub_test_verify_;
