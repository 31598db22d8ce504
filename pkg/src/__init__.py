# CWS code construction toolkit
