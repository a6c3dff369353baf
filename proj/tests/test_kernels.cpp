int indef_stub_test_kernels_;
