//! Ordered parallel map over degrees.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Applies `f` to every item on up to `jobs` threads; results keep input order.
/// The first error by input order wins.
pub fn map_ordered<T, E, F>(jobs: usize, items: &[usize], f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(usize) -> Result<T, E> + Sync,
{
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(|&n| f(n)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<T, E>>>> = items.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&n) = items.get(i) else { break };
                let out = f(n);
                *slots[i].lock().unwrap_or_else(|e| e.into_inner()) = Some(out);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .unwrap_or_else(|e| e.into_inner())
                .expect("every slot is filled once the scope joins")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<usize> = (0..50).collect();
        let out: Result<Vec<usize>, ()> = map_ordered(4, &items, |n| Ok(n * n));
        assert_eq!(out.unwrap(), items.iter().map(|n| n * n).collect::<Vec<_>>());
    }

    #[test]
    fn first_error_by_position() {
        let items = [1, 2, 3, 4];
        let out: Result<Vec<usize>, usize> = map_ordered(3, &items, |n| if n >= 2 { Err(n) } else { Ok(n) });
        assert_eq!(out, Err(2));
    }
}
