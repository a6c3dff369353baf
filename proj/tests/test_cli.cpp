int indef_stub_test_cli_;
