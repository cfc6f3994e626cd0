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

#include "minimax_dsac/checkpoint.h"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minimax_dsac {
namespace {

constexpr std::string_view kMagic = "MDSACKPT";

class Writer {
 public:
  void U32(std::uint32_t v) { Le(v, 4); }
  void U64(std::uint64_t v) { Le(v, 8); }
  void I64(std::int64_t v) { Le(static_cast<std::uint64_t>(v), 8); }
  void F64(double v) { Le(std::bit_cast<std::uint64_t>(v), 8); }
  void Bytes(std::string_view s) { out_.append(s); }
  std::string Take() { return std::move(out_); }

 private:
  void Le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::uint32_t U32() { return static_cast<std::uint32_t>(Le(4)); }
  std::uint64_t U64() { return Le(8); }
  std::int64_t I64() { return static_cast<std::int64_t>(Le(8)); }
  double F64() { return std::bit_cast<double>(Le(8)); }
  std::string_view Bytes(std::size_t n) {
    Need(n);
    std::string_view s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void Need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw std::runtime_error("checkpoint is truncated");
  }
  std::uint64_t Le(int n) {
    Need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(n);
    return v;
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

const NetParams* Checkpoint::Find(std::string_view name) const {
  for (const auto& [n, params] : networks) {
    if (n == name) return &params;
  }
  return nullptr;
}

std::string SerializeCheckpoint(const Checkpoint& c) {
  Writer w;
  w.Bytes(kMagic);
  w.U32(kCheckpointVersion);
  w.I64(c.env_steps);
  w.F64(c.log_alpha);
  w.U64(c.config_text.size());
  w.Bytes(c.config_text);
  w.U32(static_cast<std::uint32_t>(c.networks.size()));
  for (const auto& [name, params] : c.networks) {
    const Architecture& a = params.architecture();
    w.U32(static_cast<std::uint32_t>(name.size()));
    w.Bytes(name);
    w.U32(static_cast<std::uint32_t>(a.input_width));
    w.U32(static_cast<std::uint32_t>(a.hidden_widths.size()));
    for (int h : a.hidden_widths) w.U32(static_cast<std::uint32_t>(h));
    w.U32(static_cast<std::uint32_t>(a.output_width));
    w.U32(static_cast<std::uint32_t>(a.hidden_activation));
    w.U64(params.size());
    for (Eigen::Index i = 0; i < params.values().size(); ++i) w.F64(params.values()[i]);
  }
  return w.Take();
}

Checkpoint DeserializeCheckpoint(std::string_view bytes) {
  Reader r(bytes);
  if (r.Bytes(kMagic.size()) != kMagic) throw std::runtime_error("not a checkpoint file");
  const std::uint32_t version = r.U32();
  if (version != kCheckpointVersion) {
    throw std::runtime_error("unsupported checkpoint version " + std::to_string(version));
  }
  Checkpoint c;
  c.env_steps = r.I64();
  c.log_alpha = r.F64();
  c.config_text = std::string(r.Bytes(r.U64()));
  const std::uint32_t count = r.U32();
  for (std::uint32_t k = 0; k < count; ++k) {
    std::string name(r.Bytes(r.U32()));
    Architecture a;
    a.input_width = static_cast<int>(r.U32());
    const std::uint32_t hidden = r.U32();
    for (std::uint32_t h = 0; h < hidden; ++h) a.hidden_widths.push_back(static_cast<int>(r.U32()));
    a.output_width = static_cast<int>(r.U32());
    const std::uint32_t act = r.U32();
    if (act > static_cast<std::uint32_t>(Activation::kRelu)) {
      throw std::runtime_error("checkpoint has an unknown activation code");
    }
    a.hidden_activation = static_cast<Activation>(act);
    const std::uint64_t n = r.U64();
    if (n != a.ParameterCount()) throw std::runtime_error("checkpoint parameter count mismatch");
    Eigen::VectorXd values(static_cast<Eigen::Index>(n));
    for (std::uint64_t i = 0; i < n; ++i) values[static_cast<Eigen::Index>(i)] = r.F64();
    c.networks.emplace_back(std::move(name), NetParams(std::move(a), std::move(values)));
  }
  if (!r.done()) throw std::runtime_error("trailing bytes after checkpoint");
  return c;
}

void SaveCheckpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  const std::string bytes = SerializeCheckpoint(checkpoint);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

Checkpoint LoadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return DeserializeCheckpoint(buf.str());
}

}  // namespace minimax_dsac
