int indef_stub_containment_;
