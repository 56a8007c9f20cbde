use std::fmt;

/// A list of violated conditions. Validators return one of these instead of
/// stopping at the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<T> {
    issues: Vec<T>,
}

impl<T> Report<T> {
    pub fn new() -> Self {
        Report { issues: Vec::new() }
    }

    pub fn push(&mut self, issue: T) {
        self.issues.push(issue);
    }

    pub fn extend(&mut self, issues: impl IntoIterator<Item = T>) {
        self.issues.extend(issues);
    }

    pub fn is_empty(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn len(&self) -> usize {
        self.issues.len()
    }

    pub fn issues(&self) -> &[T] {
        &self.issues
    }

    pub fn into_issues(self) -> Vec<T> {
        self.issues
    }

    /// `Ok(value)` when no issue was recorded.
    pub fn into_result<V>(self, value: impl FnOnce() -> V) -> Result<V, Self> {
        if self.issues.is_empty() {
            Ok(value())
        } else {
            Err(self)
        }
    }
}

impl<T> Default for Report<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> FromIterator<T> for Report<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Report {
            issues: iter.into_iter().collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Report<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, issue) in self.issues.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display + fmt::Debug> std::error::Error for Report<T> {}
