# Tests for the CWS code toolkit
