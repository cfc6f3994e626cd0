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

#ifndef MINIMAX_DSAC_ERRORS_H_
#define MINIMAX_DSAC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace minimax_dsac {

// A loss, network output or gradient became NaN or infinite.
class NonFiniteError : public std::runtime_error {
 public:
  NonFiniteError(const std::string& what, long index = -1)
      : std::runtime_error(what), index_(index) {}

  // Batch index of the first offending sample, or -1 if not sample-specific.
  long index() const { return index_; }

 private:
  long index_;
};

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_ERRORS_H_
