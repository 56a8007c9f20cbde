use std::collections::BTreeSet;

/// Hands out identifiers that are unique within one namespace.
///
/// A requested name that is already taken gets primes appended until it is
/// free, so the result only depends on the order of requests.
#[derive(Debug, Clone, Default)]
pub struct NameAllocator {
    taken: BTreeSet<String>,
}

impl NameAllocator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_reserved<I, S>(reserved: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        NameAllocator {
            taken: reserved.into_iter().map(Into::into).collect(),
        }
    }

    pub fn allocate(&mut self, wanted: &str) -> String {
        let mut name = wanted.to_string();
        while self.taken.contains(&name) {
            name.push('\'');
        }
        self.taken.insert(name.clone());
        name
    }
}

/// Identifiers appear as whitespace-separated tokens in the text formats and
/// inside comma lists, so a handful of characters are reserved.
pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id != "="
        && !id
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '@' | '#' | '='))
}
