#include "tabinhib/io_util.h"

#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tabinhib/errors.h"

namespace tabinhib {

std::string fmtDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double parseDouble(const std::string& token, const std::string& context) {
  double value = 0.0;
  const char* begin = token.c_str();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(context + ": expected a number, got '" + token + "'");
  }
  return value;
}

long parseLong(const std::string& token, const std::string& context) {
  long value = 0;
  const char* begin = token.c_str();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(context + ": expected an integer, got '" + token + "'");
  }
  return value;
}

std::vector<std::string> splitTokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

void appendU32(std::string& out, uint32_t v) {
  for (int byte = 0; byte < 4; ++byte) out.push_back(static_cast<char>((v >> (8 * byte)) & 0xff));
}

void appendU64(std::string& out, uint64_t v) {
  for (int byte = 0; byte < 8; ++byte) out.push_back(static_cast<char>((v >> (8 * byte)) & 0xff));
}

void appendF64(std::string& out, double v) {
  uint64_t bits = 0;
  std::memcpy(&bits, &v, sizeof(bits));
  appendU64(out, bits);
}

namespace {

void requireBytes(const std::string& buf, size_t pos, size_t n, const std::string& context) {
  if (pos + n > buf.size()) throw ParseError(context + ": truncated binary data");
}

}  // namespace

uint32_t readU32(const std::string& buf, size_t& pos, const std::string& context) {
  requireBytes(buf, pos, 4, context);
  uint32_t v = 0;
  for (int byte = 0; byte < 4; ++byte) {
    v |= static_cast<uint32_t>(static_cast<uint8_t>(buf[pos + byte])) << (8 * byte);
  }
  pos += 4;
  return v;
}

uint64_t readU64(const std::string& buf, size_t& pos, const std::string& context) {
  requireBytes(buf, pos, 8, context);
  uint64_t v = 0;
  for (int byte = 0; byte < 8; ++byte) {
    v |= static_cast<uint64_t>(static_cast<uint8_t>(buf[pos + byte])) << (8 * byte);
  }
  pos += 8;
  return v;
}

double readF64(const std::string& buf, size_t& pos, const std::string& context) {
  uint64_t bits = readU64(buf, pos, context);
  double v = 0.0;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

std::string readBinaryFile(const std::string& path) { return readTextFile(path); }

void writeBinaryFile(const std::string& path, const std::string& content) {
  writeTextFile(path, content);
}

}  // namespace tabinhib
