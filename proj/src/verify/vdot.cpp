int indef_stub_vdot_;
