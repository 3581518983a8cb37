//! Reporting for the acceptance suite: each check prints one PASS or FAIL
//! line, and a failed check never stops the ones after it.

use std::panic::{catch_unwind, AssertUnwindSafe};

/// A check's summary on success, or why it failed.
pub type Check = Result<String, String>;

/// A labelled sub-item of a [`Suite::group`].
pub type Item<'a> = (&'a str, Box<dyn FnOnce() -> Check>);

/// `Ok(())` when `ok`, otherwise the message from `why`.
pub fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

#[derive(Debug, Default)]
pub struct Suite {
    lines: Vec<String>,
    failed: Vec<String>,
    /// Print lines as they are produced.
    pub echo: bool,
}

impl Suite {
    pub fn new() -> Self {
        Suite {
            echo: true,
            ..Suite::default()
        }
    }

    fn emit(&mut self, line: String) {
        if self.echo {
            println!("{line}");
        }
        self.lines.push(line);
    }

    /// Runs one check; a panic counts as a failure.
    pub fn run(&mut self, name: &str, f: impl FnOnce() -> Check) -> bool {
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match res {
            Ok(detail) => {
                self.emit(format!("PASS {name}: {detail}"));
                true
            }
            Err(why) => {
                self.emit(format!("FAIL {name}: {why}"));
                self.failed.push(name.to_string());
                false
            }
        }
    }

    /// A criterion made of sub-items, printed indented; it passes when all
    /// of them do.
    pub fn group(&mut self, name: &str, items: Vec<Item>) -> bool {
        let total = items.len();
        let mut bad = 0;
        for (label, f) in items {
            let mut sub = Suite {
                echo: self.echo,
                ..Suite::default()
            };
            if !sub.run(&format!("  {name} / {label}"), f) {
                bad += 1;
            }
            self.lines.append(&mut sub.lines);
        }
        if bad == 0 {
            self.emit(format!("PASS {name}: {total} of {total} items"));
            true
        } else {
            self.emit(format!("FAIL {name}: {bad} of {total} items failed"));
            self.failed.push(name.to_string());
            false
        }
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn failed(&self) -> &[String] {
        &self.failed
    }

    /// Prints the summary line and returns the process exit code.
    pub fn finish(&self) -> i32 {
        if self.failed.is_empty() {
            println!("acceptance: all criteria pass");
            0
        } else {
            println!(
                "acceptance: {} failing: {}",
                self.failed.len(),
                self.failed.join(", ")
            );
            1
        }
    }
}
