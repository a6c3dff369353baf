int indef_stub_commands_;
