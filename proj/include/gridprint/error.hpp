// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridprint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The host does not expose RAPL package domains under powercap.
class NoPowercapInterface : public Error {
 public:
  using Error::Error;
};

/// A counter file could not be opened or parsed.
class ReadFailure : public Error {
 public:
  ReadFailure(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The process phase produced no power samples (it ended too quickly).
class EmptyProcessSamples : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::size_t row, std::string column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column '" + column + "': " + what),
        row_(row),
        column_(std::move(column)) {}
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

class ZeroGeneration : public Error {
 public:
  using Error::Error;
};

class UnknownRegion : public Error {
 public:
  UnknownRegion(const std::string& key, std::vector<std::string> suggestions,
                const std::string& what)
      : Error(what), key_(key), suggestions_(std::move(suggestions)) {}
  const std::string& key() const noexcept { return key_; }
  const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

 private:
  std::string key_;
  std::vector<std::string> suggestions_;
};

class EmptyGroup : public Error {
 public:
  using Error::Error;
};

class UnknownGroup : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gridprint
