int indef_stub_jsonout_;
