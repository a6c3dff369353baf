int indef_stub_sysfile_;
