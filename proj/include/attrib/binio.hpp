#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "attrib/error.hpp"

namespace attrib {

// Little-endian binary cache format shared by all .bin artifacts.
// Layout: magic "ATRB", one kind byte, u16 version, then kind-specific data.

inline constexpr char kCorpusKind = 'C';
inline constexpr char kChunksKind = 'K';
inline constexpr char kSplitKind = 'S';
inline constexpr char kEncodingsKind = 'E';
inline constexpr char kModelKind = 'M';

class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream& out) : out_(out) {}

  void u8(std::uint8_t v) { raw(&v, 1); }
  void u16(std::uint16_t v) { le(v); }
  void u32(std::uint32_t v) { le(v); }
  void u64(std::uint64_t v) { le(v); }
  void i32(std::int32_t v) { le(static_cast<std::uint32_t>(v)); }
  void i64(std::int64_t v) { le(static_cast<std::uint64_t>(v)); }

  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    le(bits);
  }

  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    raw(s.data(), s.size());
  }

 private:
  template <typename T>
  void le(T v) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<unsigned char>(v >> (8 * i));
    }
    raw(buf, sizeof(T));
  }

  void raw(const void* p, std::size_t n) {
    out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!out_) fail_runtime("write failure on binary output");
  }

  std::ostream& out_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::istream& in) : in_(in) {}

  std::uint8_t u8() {
    std::uint8_t v;
    raw(&v, 1);
    return v;
  }
  std::uint16_t u16() { return le<std::uint16_t>(); }
  std::uint32_t u32() { return le<std::uint32_t>(); }
  std::uint64_t u64() { return le<std::uint64_t>(); }
  std::int32_t i32() { return static_cast<std::int32_t>(le<std::uint32_t>()); }
  std::int64_t i64() { return static_cast<std::int64_t>(le<std::uint64_t>()); }

  double f64() {
    const std::uint64_t bits = le<std::uint64_t>();
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
  }

  std::string str() {
    const std::uint32_t n = u32();
    std::string s(n, '\0');
    raw(s.data(), n);
    return s;
  }

 private:
  template <typename T>
  T le() {
    unsigned char buf[sizeof(T)];
    raw(buf, sizeof(T));
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
    return v;
  }

  void raw(void* p, std::size_t n) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      fail_runtime("truncated or corrupt binary file");
    }
  }

  std::istream& in_;
};

inline void write_format_header(BinaryWriter& w, char kind, std::uint16_t version) {
  w.u8('A');
  w.u8('T');
  w.u8('R');
  w.u8('B');
  w.u8(static_cast<std::uint8_t>(kind));
  w.u16(version);
}

// Returns the file version; fails when the magic or kind does not match.
inline std::uint16_t read_format_header(BinaryReader& r, char expected_kind) {
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (std::string_view(magic, 4) != "ATRB") {
    fail_validation("not an attrib binary file (bad magic)");
  }
  const char kind = static_cast<char>(r.u8());
  if (kind != expected_kind) {
    fail_validation(std::string("unexpected binary file kind '") + kind +
                    "', wanted '" + expected_kind + "'");
  }
  return r.u16();
}

// Reads just the kind byte so the CLI can dispatch on a file's contents.
char peek_format_kind(std::istream& in);

}  // namespace attrib
