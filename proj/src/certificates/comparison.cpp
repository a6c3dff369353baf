int indef_stub_comparison_;
