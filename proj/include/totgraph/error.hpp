// Copyright 2026 The totgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace totgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring specification. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position,
             std::vector<std::string> expected = {});

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// A ring could not be realized (non-local block, size cap, bad arguments).
class RingError : public Error {
 public:
  using Error::Error;
};

/// Raised by graph builders and graph-structure checks.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Z(R) failed additive closure: a, b in Z(R) with a + b outside it.
class NotIdealError : public GraphError {
 public:
  NotIdealError(const std::string& message, std::uint32_t a, std::uint32_t b)
      : GraphError(message), a_(a), b_(b) {}
  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }

 private:
  std::uint32_t a_;
  std::uint32_t b_;
};

/// A coloring construction was invoked outside its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A certificate input (coloring or clique) failed re-validation.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace totgraph
