int indef_stub_residual_;
