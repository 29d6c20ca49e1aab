#include "bimsa/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace bimsa {

namespace {

int default_threads() {
    if (const char* env = std::getenv("BIMSA_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::atomic<int> g_threads{0};

// True on pool workers and inside an active parallel_for; nested calls run
// inline so chunk boundaries never depend on scheduling.
thread_local bool g_in_parallel = false;

// Minimal persistent pool. The caller runs chunk 0 itself; workers take the
// remaining chunks one at a time.
class Pool {
public:
    explicit Pool(int workers) {
        for (int i = 0; i < workers; ++i) {
            threads_.emplace_back([this] { run(); });
        }
    }

    ~Pool() {
        {
            std::lock_guard<std::mutex> lk(mu_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    void dispatch(const std::function<void(int64_t, int64_t)>& fn,
                  const std::vector<std::pair<int64_t, int64_t>>& chunks) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            fn_ = &fn;
            chunks_ = &chunks;
            next_ = 1;  // chunk 0 belongs to the caller
            pending_ = static_cast<int>(chunks.size()) - 1;
        }
        cv_.notify_all();
        fn(chunks[0].first, chunks[0].second);
        std::unique_lock<std::mutex> lk(mu_);
        done_cv_.wait(lk, [this] { return pending_ == 0; });
        fn_ = nullptr;
        chunks_ = nullptr;
    }

    int size() const { return static_cast<int>(threads_.size()); }

private:
    void run() {
        g_in_parallel = true;
        std::unique_lock<std::mutex> lk(mu_);
        for (;;) {
            cv_.wait(lk, [&] { return stop_ || has_work(); });
            if (stop_) return;
            while (has_work()) {
                auto idx = next_++;
                auto* fn = fn_;
                auto chunk = (*chunks_)[idx];
                lk.unlock();
                (*fn)(chunk.first, chunk.second);
                lk.lock();
                if (--pending_ == 0) done_cv_.notify_all();
            }
        }
    }

    bool has_work() const {
        return chunks_ != nullptr &&
               next_ < static_cast<int64_t>(chunks_->size());
    }

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_, done_cv_;
    const std::function<void(int64_t, int64_t)>* fn_ = nullptr;
    const std::vector<std::pair<int64_t, int64_t>>* chunks_ = nullptr;
    int64_t next_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

Pool& pool() {
    static Pool p(default_threads() - 1);
    return p;
}

// Only one parallel_for may own the pool at a time; contenders run inline.
std::mutex g_dispatch_mu;

} // namespace

int num_threads() {
    int n = g_threads.load();
    return n > 0 ? n : default_threads();
}

void set_num_threads(int n) { g_threads.store(n); }

void parallel_for(int64_t begin, int64_t end,
                  const std::function<void(int64_t, int64_t)>& fn) {
    if (end <= begin) return;
    int nt = num_threads();
    int64_t span = end - begin;
    if (nt <= 1 || span == 1 || g_in_parallel || pool().size() == 0) {
        fn(begin, end);
        return;
    }
    std::unique_lock<std::mutex> dl(g_dispatch_mu, std::try_to_lock);
    if (!dl.owns_lock()) {
        fn(begin, end);
        return;
    }
    int64_t nchunks = std::min<int64_t>(nt, span);
    std::vector<std::pair<int64_t, int64_t>> chunks;
    chunks.reserve(nchunks);
    int64_t base = span / nchunks, rem = span % nchunks, cur = begin;
    for (int64_t i = 0; i < nchunks; ++i) {
        int64_t len = base + (i < rem ? 1 : 0);
        chunks.emplace_back(cur, cur + len);
        cur += len;
    }
    g_in_parallel = true;
    pool().dispatch(fn, chunks);
    g_in_parallel = false;
}

} // namespace bimsa
