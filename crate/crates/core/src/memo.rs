//! Process-wide memo tables with idempotent insertion.
//!
//! Values are computed outside the lock; if two callers race on the same key
//! the first inserted value wins and both receive it.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;

use crate::error::Result;

pub(crate) struct Memo<K, V> {
    table: spin::Mutex<BTreeMap<K, Arc<V>>>,
}

impl<K: Ord + Clone, V> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { table: spin::Mutex::new(BTreeMap::new()) }
    }

    pub(crate) fn get_or_try(&self, key: &K, compute: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.table.lock().get(key) {
            return Ok(v.clone());
        }
        let value = Arc::new(compute()?);
        let mut table = self.table.lock();
        Ok(table.entry(key.clone()).or_insert(value).clone())
    }

    pub(crate) fn len(&self) -> usize {
        self.table.lock().len()
    }
}
