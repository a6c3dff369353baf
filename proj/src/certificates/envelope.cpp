int indef_stub_envelope_;
