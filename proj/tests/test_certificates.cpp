int indef_stub_test_certificates_;
