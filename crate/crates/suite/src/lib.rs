//! Holds the `acceptance` test target. It lives in its own package so that a
//! red criterion never stops the other test targets from running.
