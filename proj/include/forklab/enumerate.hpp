#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "forklab/fork.hpp"

namespace forklab {

struct EnumerationCaps {
  std::size_t max_string_len = 8;
  int multi_honest_cap = 2;
  bool closed_only = false;
  // Open forks are a closed core plus at most this many paths of adversarial
  // vertices, each hanging directly off a core vertex. Any witness built from
  // two tines survives cutting an open fork down to this shape.
  int max_dangling_paths = 2;
  // Enumerate delta-forks (F4 relaxed to F4_delta).
  int delta = 0;

  std::string key() const;
};

// Every fork for w up to label-preserving isomorphism, within the caps, in a
// deterministic order (sorted by canonical encoding).
std::vector<Fork> enumerate_forks(const CharString& w, const EnumerationCaps& caps = {});

// Thread-safe memo of enumerations keyed by (string, caps).
class ForkCache {
 public:
  const std::vector<Fork>& get(const CharString& w, const EnumerationCaps& caps);

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const std::vector<Fork>>> memo_;
};

ForkCache& default_fork_cache();

}  // namespace forklab
