//! Doc-test harness for the book chapters. Each chapter under `book/src/` is
//! included verbatim as module documentation so its fenced Rust snippets
//! compile and run under `cargo test`.
