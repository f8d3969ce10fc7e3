#pragma once

#include <omp.h>

#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>
#include <memory>

#include "vafilt/linalg/subspace.hpp"

namespace vafilt {

/// Serial runs the reference loop; Parallel distributes independent work
/// items over OpenMP threads. Results never depend on the choice.
enum class Execution { Serial, Parallel };

struct ExecConfig {
  Execution mode = Execution::Parallel;
  int threads = 0;  ///< 0 keeps the OpenMP default
};

/// Runs body(i) for i in [0, n). Exceptions from workers are rethrown after
/// the loop (the one with the smallest index wins, so the error is stable).
template <class Body>
void for_each_index(std::size_t n, const ExecConfig& exec, Body&& body) {
  if (exec.mode == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::size_t error_index = n;
  int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(vafilt_error)
      {
        if (static_cast<std::size_t>(i) < error_index) {
          error_index = static_cast<std::size_t>(i);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

using Describer = std::function<std::string()>;
using SliceCertificates = std::map<Ambient::Key, std::vector<std::string>>;

/// Builds a graded subspace slice by slice. gen(key, sink) feeds spanning
/// vectors of that weight into sink(v, describe), which returns false once the
/// slice is the whole ambient slice so generation can stop early. When certs
/// is given, describe() is recorded for every vector that raised the rank.
template <class Tag, class Gen>
GradedSubspace<Tag> build_by_slices(std::shared_ptr<const Ambient> amb, Gen&& gen,
                                    const ExecConfig& exec, SliceCertificates* certs = nullptr) {
  GradedSubspace<Tag> out(amb);
  const auto& keys = amb->keys();
  if (certs)
    for (Ambient::Key k : keys) (*certs)[k];
  for_each_index(keys.size(), exec, [&](std::size_t idx) {
    Ambient::Key k = keys[idx];
    SliceBasis& sb = out.slice_mut(k);
    std::vector<std::string>* record = certs ? &certs->at(k) : nullptr;
    std::function<bool(const LinComb<Tag>&, const Describer&)> sink =
        [&](const LinComb<Tag>& v, const Describer& describe) {
          if (sb.full()) return false;
          if (!v.is_zero()) {
            auto vk = out.key_of(v);
            if (*vk != k)
              throw NonHomogeneous("spanning vector of weight " + amb->weight_str(*vk) +
                                   " fed to slice " + amb->weight_str(k));
            if (sb.insert(out.to_row(v, k)) && record) record->push_back(describe());
          }
          return !sb.full();
        };
    gen(k, sink);
  });
  return out;
}

}  // namespace vafilt
