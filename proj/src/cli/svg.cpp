int indef_stub_svg_;
