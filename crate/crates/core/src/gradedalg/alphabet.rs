use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(degree: u32) -> Self {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub parity: Parity,
}

/// An ordered list of named, positively graded generators. Odd-degree
/// generators anticommute and square to zero.
#[derive(Debug, Clone)]
pub struct GeneratorAlphabet {
    entries: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for GeneratorAlphabet {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for GeneratorAlphabet {}

impl GeneratorAlphabet {
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        for (name, degree) in entries {
            let name = name.into();
            if degree == 0 {
                return Err(Error::invalid(format!("generator `{name}` has degree 0")));
            }
            if index.insert(name.clone(), list.len()).is_some() {
                return Err(Error::invalid(format!("duplicate generator `{name}`")));
            }
            list.push(Generator {
                name,
                degree,
                parity: Parity::of_degree(degree),
            });
        }
        Ok(GeneratorAlphabet {
            entries: list,
            index,
        })
    }

    /// `prefix1, prefix2, ..., prefix{count}` with degrees `step, 2*step, ...`.
    pub fn indexed(prefix: &str, count: usize, step: u32) -> Self {
        Self::new((1..=count).map(|i| (format!("{prefix}{i}"), step * i as u32)))
            .expect("indexed alphabets are well formed")
    }

    pub fn empty() -> Self {
        GeneratorAlphabet {
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.entries
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.entries[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.entries[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.entries[i].parity == Parity::Odd
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

pub(crate) fn same_alphabet(a: &Arc<GeneratorAlphabet>, b: &Arc<GeneratorAlphabet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
