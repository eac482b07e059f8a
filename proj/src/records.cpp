// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Witness lines and checkpoint files.

#include <charconv>
#include <fstream>
#include <sstream>

#include "nonne/error.hpp"
#include "nonne/heilbronn.hpp"

namespace nonne {

std::string format_witness(const Witness& w) {
  return "f=" + std::to_string(w.f) + ", q1=" + std::to_string(w.q1) + ", q2=" + std::to_string(w.q2) +
         ", r=" + std::to_string(w.r);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Consumes `key` followed by an unsigned integer.
bool take_field(std::string_view& s, std::string_view key, u64& value) {
  if (s.substr(0, key.size()) != key) return false;
  s.remove_prefix(key.size());
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

std::optional<Witness> parse_witness(std::string_view line, std::uint32_t ell) {
  std::string_view s = trim(line);
  Witness w;
  w.ell = ell;
  if (!take_field(s, "f=", w.f) || !take_field(s, ", q1=", w.q1) || !take_field(s, ", q2=", w.q2) ||
      !take_field(s, ", r=", w.r) || !s.empty()) {
    return std::nullopt;
  }
  return w;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorKind::Resource, "cannot write checkpoint " + tmp.string());
    out << "ell=" << cp.ell << " A=" << cp.from << " B=" << cp.to << '\n';
    out << "done=" << cp.done << '\n';
    for (u64 f : cp.survivors) out << f << '\n';
    out.flush();
    if (!out) fail(ErrorKind::Resource, "short write on checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open checkpoint " + path.string());
  Checkpoint cp;
  std::string line;
  auto bad = [&](int lineno) {
    fail(ErrorKind::Parse, path.string() + ":" + std::to_string(lineno) + ": malformed checkpoint line");
  };
  if (!std::getline(in, line)) bad(1);
  {
    std::string_view s = trim(line);
    u64 ell = 0;
    if (!take_field(s, "ell=", ell) || !take_field(s, " A=", cp.from) || !take_field(s, " B=", cp.to) ||
        !s.empty()) {
      bad(1);
    }
    cp.ell = static_cast<std::uint32_t>(ell);
  }
  if (!std::getline(in, line)) bad(2);
  {
    std::string_view s = trim(line);
    if (!take_field(s, "done=", cp.done) || !s.empty()) bad(2);
  }
  int lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    u64 f = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), f);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad(lineno);
    if (!cp.survivors.empty() && f <= cp.survivors.back()) bad(lineno);
    cp.survivors.push_back(f);
  }
  return cp;
}

}  // namespace nonne
