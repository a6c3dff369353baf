int indef_stub_acceptance_main_;
