#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace codeg {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct Claim {
  std::string name;
  Verdict verdict;
};

struct ScanReport {
  std::string scan;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  std::vector<Claim> claims;
  unsigned long inconclusive = 0;

  void param(std::string k, std::string v) { params.emplace_back(std::move(k), std::move(v)); }
  void note(std::string n) { notes.push_back(std::move(n)); }
  void claim(std::string name, bool holds) { claims.push_back({std::move(name), holds ? Verdict::Pass : Verdict::Fail}); }
  void claim(std::string name, Verdict v) { claims.push_back({std::move(name), v}); }

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  // PASS, FAIL or INCONCLUSIVE(<n>)
  std::string verdict_line() const;
  std::string to_tsv() const;
  std::string to_json() const;
};

// runs f(i) for i in [0, n) on up to `threads` workers; results must be
// written to per-index slots so the output does not depend on scheduling
template <class F>
void parallel_for(size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  auto work = [&] {
    for (size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads && k < n; ++k) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

unsigned default_threads();

}  // namespace codeg
