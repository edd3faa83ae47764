//! Multi-threaded drivers for the exhaustive scans.
//!
//! The enumeration is split into fixed chunks by the core crate; workers
//! pull chunk indices from a shared atomic counter, fold their own partial
//! state, and the partials are merged at the end. Both the per-chunk
//! observers and the merge are order-independent, so the result is
//! bit-for-bit identical to the single-threaded drivers regardless of thread
//! count or scheduling.

use std::sync::atomic::{AtomicU32, Ordering};
use std::thread;

use trilat::{
    classify, Claim, ClaimVerifier, EnumSpec, ImplicationMiner, ImplicationTable,
    VerificationReport,
};

/// Runs every worker over chunks handed out by an atomic cursor and merges
/// the per-worker accumulators.
fn scan_chunks<Acc, Observe, Merge>(
    bound: u32,
    threads: usize,
    make: impl Fn() -> Acc + Sync,
    observe: Observe,
    merge: Merge,
) -> Acc
where
    Acc: Send,
    Observe: Fn(&mut Acc, &trilat::Triangle) + Sync,
    Merge: Fn(Acc, Acc) -> Acc,
{
    let threads = threads.max(1);
    let chunk_count = EnumSpec::new(bound).chunk_count();
    let next = AtomicU32::new(0);
    let partials: Vec<Acc> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let spec = EnumSpec::new(bound);
                    let mut acc = make();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= chunk_count {
                            break;
                        }
                        for t in spec.chunk(i) {
                            observe(&mut acc, &t);
                        }
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    partials
        .into_iter()
        .reduce(merge)
        .expect("at least one worker")
}

/// Checks all five claims in one shared enumeration pass split over
/// `threads` workers. Produces exactly the same reports as
/// [`trilat::verify_all`].
pub fn verify_all_parallel(bound: u32, threads: usize) -> Vec<VerificationReport> {
    let verifiers = scan_chunks(
        bound,
        threads,
        || {
            Claim::ALL
                .into_iter()
                .map(ClaimVerifier::new)
                .collect::<Vec<_>>()
        },
        |vs, t| {
            let cv = classify(t);
            for v in vs.iter_mut() {
                v.observe(t, &cv);
            }
        },
        |a, b| a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect(),
    );
    verifiers.into_iter().map(|v| v.finish(bound)).collect()
}

/// Mines the implication table over `threads` workers. Produces exactly the
/// same table as [`trilat::mine_implications`].
pub fn mine_parallel(bound: u32, threads: usize) -> ImplicationTable {
    scan_chunks(
        bound,
        threads,
        ImplicationMiner::new,
        |m, t| m.observe(t),
        ImplicationMiner::merge,
    )
    .finish(bound)
}
