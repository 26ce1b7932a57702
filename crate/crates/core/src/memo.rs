use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Append-only memo table. Readers share the lock; insertion is serialized.
///
/// The compute closure runs without holding the lock, so it may recurse
/// into the same table. Two threads racing on one key compute the same
/// value; the first insertion wins and both observe it.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(&key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut map = self.map.write().expect("memo lock poisoned");
        Arc::clone(map.entry(key).or_insert(value))
    }
}
