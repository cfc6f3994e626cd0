// Copyright 2026 The minimax_dsac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINIMAX_DSAC_REPLAY_BUFFER_H_
#define MINIMAX_DSAC_REPLAY_BUFFER_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "minimax_dsac/types.h"

namespace minimax_dsac {

// Thrown when a batch is requested before the buffer holds enough transitions.
class WarmupIncompleteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-capacity FIFO of transitions. Once full, each push evicts the oldest.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void Push(const Transition& transition);

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return storage_.size(); }
  bool empty() const { return size_ == 0; }

  // i-th retained transition in insertion order (0 is the oldest).
  const Transition& at(std::size_t i) const;

  // n transitions drawn uniformly with replacement.
  std::vector<Transition> SampleBatch(std::size_t n, Rng& rng) const;

 private:
  std::vector<Transition> storage_;
  std::size_t head_ = 0;  // index of the oldest element
  std::size_t size_ = 0;
};

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_REPLAY_BUFFER_H_
