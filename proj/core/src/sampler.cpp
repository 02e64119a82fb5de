// Copyright 2026 The gssf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gssf/sampler.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace gssf {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed) : seed_(seed), engine_(make_engine(seed)) {}

Sampler Sampler::derive(std::uint64_t stream) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                    static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return Sampler((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

double Sampler::uniform01() {
  // 53 random mantissa bits -> [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::scalar(double lo, double hi) {
  if (!(lo < hi)) throw Error("scalar sample requires lo < hi");
  ++counter_;
  return lo + (hi - lo) * uniform01();
}

double Sampler::gaussian() {
  ++counter_;
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector Sampler::unit_vector(Eigen::Index dim) {
  if (dim < 1) throw Error("unit_vector requires a positive dimension");
  ++counter_;
  Vector v(dim);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double u1 = 1.0 - uniform01();
      const double u2 = uniform01();
      v(i) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    norm = v.norm();
  } while (norm < 1e-6);
  return v / norm;
}

std::vector<Eigen::MatrixXd> Sampler::symmetric_coeffs(Eigen::Index size,
                                                       Eigen::Index count) {
  ++counter_;
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<size_t>(std::max<Eigen::Index>(count, 0)));
  for (Eigen::Index k = 0; k < count; ++k) {
    Eigen::MatrixXd block(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
      for (Eigen::Index j = i; j < size; ++j) {
        const double x = 2.0 * uniform01() - 1.0;
        block(i, j) = x;
        block(j, i) = x;
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

namespace detail {

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (count <= 0) return;
  const int workers = std::clamp(threads, 1, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  // The lowest failing index wins so errors do not depend on scheduling.
  std::exception_ptr failure;
  int failed_index = count;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (i < failed_index) {
            failed_index = i;
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

}  // namespace gssf
