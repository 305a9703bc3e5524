//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature the hot loops run on rayon; without it
//! they degrade to plain iterators. Every helper keeps its output in input
//! order and reduces over fixed-size chunks, so results are bit-identical
//! for any thread count (and for the sequential build).

/// Chunk size for deterministic reductions. Partial sums are computed per
/// chunk and merged in chunk order, so the float op order never depends on
/// the thread count.
pub const CHUNK: usize = 4096;

#[cfg(feature = "parallel")]
mod imp {
    use rayon::prelude::*;

    pub fn map_range<U: Send, F: Fn(usize) -> U + Sync + Send>(n: usize, f: F) -> Vec<U> {
        (0..n).into_par_iter().map(f).collect()
    }

    pub fn map_slice<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
        items.par_iter().map(f).collect()
    }

    pub fn flat_map_range<U: Send, F: Fn(usize) -> Vec<U> + Sync + Send>(n: usize, f: F) -> Vec<U> {
        (0..n).into_par_iter().flat_map_iter(f).collect()
    }

    pub fn for_each_chunk_mut<T: Send, F: Fn(usize, &mut [T]) + Sync + Send>(
        items: &mut [T],
        chunk: usize,
        f: F,
    ) {
        items
            .par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(i * chunk, c));
    }

    /// Sort by a key that must be unique per element; uniqueness makes the
    /// unstable parallel sort deterministic.
    pub fn sort_by_unique_key<T: Send, K: Ord + Send, F: Fn(&T) -> K + Sync + Send>(
        items: &mut [T],
        key: F,
    ) {
        items.par_sort_unstable_by_key(key);
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    pub fn map_range<U, F: Fn(usize) -> U>(n: usize, f: F) -> Vec<U> {
        (0..n).map(f).collect()
    }

    pub fn map_slice<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
        items.iter().map(f).collect()
    }

    pub fn flat_map_range<U, F: Fn(usize) -> Vec<U>>(n: usize, f: F) -> Vec<U> {
        (0..n).flat_map(f).collect()
    }

    pub fn for_each_chunk_mut<T, F: Fn(usize, &mut [T])>(items: &mut [T], chunk: usize, f: F) {
        for (i, c) in items.chunks_mut(chunk).enumerate() {
            f(i * chunk, c);
        }
    }

    pub fn sort_by_unique_key<T, K: Ord, F: Fn(&T) -> K>(items: &mut [T], key: F) {
        items.sort_unstable_by_key(key);
    }
}

pub use imp::*;

/// Deterministic sum of per-chunk partials: chunks are fixed-size, partials
/// are merged left to right.
#[cfg(feature = "parallel")]
pub fn sum_chunked<T, A, F>(items: &[T], init: A, fold: F) -> A
where
    T: Sync,
    A: Send + Sync + Clone + std::ops::AddAssign,
    F: Fn(A, &T) -> A + Sync + Send,
{
    use rayon::prelude::*;
    let partials: Vec<A> = items
        .par_chunks(CHUNK)
        .map(|c| c.iter().fold(init.clone(), &fold))
        .collect();
    let mut acc = init;
    for p in partials {
        acc += p;
    }
    acc
}

#[cfg(not(feature = "parallel"))]
pub fn sum_chunked<T, A, F>(items: &[T], init: A, fold: F) -> A
where
    A: Clone + std::ops::AddAssign,
    F: Fn(A, &T) -> A,
{
    let mut acc = init;
    for c in items.chunks(CHUNK) {
        let p = c.iter().fold(init.clone(), &fold);
        acc += p;
    }
    acc
}

/// Run `f` inside a worker pool of `threads` threads. With the sequential
/// build the pool size is ignored.
#[cfg(feature = "parallel")]
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to build thread pool")
        .install(f)
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R>(_threads: usize, f: impl FnOnce() -> R) -> R {
    f()
}
