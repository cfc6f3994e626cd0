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

#include "minimax_dsac/replay_buffer.h"

#include <string>

namespace minimax_dsac {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : storage_(capacity) {
  if (capacity == 0) throw std::invalid_argument("replay buffer capacity must be positive");
}

void ReplayBuffer::Push(const Transition& transition) {
  const std::size_t cap = storage_.size();
  if (size_ < cap) {
    storage_[(head_ + size_) % cap] = transition;
    ++size_;
  } else {
    storage_[head_] = transition;
    head_ = (head_ + 1) % cap;
  }
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("replay buffer index out of range");
  return storage_[(head_ + i) % storage_.size()];
}

std::vector<Transition> ReplayBuffer::SampleBatch(std::size_t n, Rng& rng) const {
  if (n == 0) throw std::invalid_argument("batch size must be positive");
  if (size_ < n) {
    throw WarmupIncompleteError("replay buffer holds " + std::to_string(size_) +
                                " transitions, batch of " + std::to_string(n) + " requested");
  }
  std::uniform_int_distribution<std::size_t> index(0, size_ - 1);
  std::vector<Transition> batch;
  batch.reserve(n);
  for (std::size_t k = 0; k < n; ++k) batch.push_back(at(index(rng)));
  return batch;
}

}  // namespace minimax_dsac
