int indef_stub_test_quadsig_;
