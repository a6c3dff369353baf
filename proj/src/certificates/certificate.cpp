int indef_stub_certificate_;
