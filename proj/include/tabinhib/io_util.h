#ifndef TABINHIB_IO_UTIL_H_
#define TABINHIB_IO_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace tabinhib {

/// Shortest text form of a double that parses back to the same bits
/// (printf "%.17g" is exact for IEEE doubles). All text serializers use this
/// so that save -> load -> save is byte-identical.
std::string fmtDouble(double value);

/// Strict numeric parsing; `context` names the file/line/field for errors.
double parseDouble(const std::string& token, const std::string& context);
long parseLong(const std::string& token, const std::string& context);

/// Whitespace tokenization of one line.
std::vector<std::string> splitTokens(const std::string& line);

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

/// Little-endian binary primitives for the compact matrix/checkpoint forms.
void appendU32(std::string& out, uint32_t v);
void appendU64(std::string& out, uint64_t v);
void appendF64(std::string& out, double v);
uint32_t readU32(const std::string& buf, size_t& pos, const std::string& context);
uint64_t readU64(const std::string& buf, size_t& pos, const std::string& context);
double readF64(const std::string& buf, size_t& pos, const std::string& context);

std::string readBinaryFile(const std::string& path);
void writeBinaryFile(const std::string& path, const std::string& content);

}  // namespace tabinhib

#endif  // TABINHIB_IO_UTIL_H_
