//! Name-keyed lookup of strategy objects.

use std::fmt;

/// Anything that can be registered under a stable name.
pub trait Named {
    fn name(&self) -> &'static str;
}

/// Ordered collection of boxed strategies, looked up by [`Named::name`].
pub struct Registry<T: ?Sized + Named> {
    what: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    /// `what` names the family in error messages ("network", "trial", ...).
    pub fn new(what: &'static str) -> Self {
        Registry {
            what,
            entries: Vec::new(),
        }
    }

    /// Adds `entry`, replacing any previous entry with the same name.
    pub fn register(&mut self, entry: Box<T>) {
        match self.entries.iter().position(|e| e.name() == entry.name()) {
            Some(idx) => self.entries[idx] = entry,
            None => self.entries.push(entry),
        }
    }

    pub fn with(mut self, entry: Box<T>) -> Self {
        self.register(entry);
        self
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
    }

    /// Like [`Registry::get`] but reports unknown names as a config error on `field`.
    pub fn resolve(&self, field: &str, name: &str) -> crate::Result<&T> {
        self.get(name).ok_or_else(|| {
            crate::Error::config(
                field,
                format!(
                    "unknown {} `{}` (expected one of: {})",
                    self.what,
                    name,
                    self.names().join(", ")
                ),
            )
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| e.as_ref())
    }
}

impl<T: ?Sized + Named> fmt::Debug for Registry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("what", &self.what)
            .field("entries", &self.names())
            .finish()
    }
}
