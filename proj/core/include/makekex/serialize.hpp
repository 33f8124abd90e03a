#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "makekex/attack.hpp"

namespace makekex {

// Content hash used to pin a transcript to the exact params file it came
// from. Not cryptographic; it guards against accidents, not adversaries.
std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex64(std::uint64_t v);

// Accepts a builtin group name ("s3") or explicit generators in zero-based
// one-line notation ("[[1,0,2],[1,2,0]]").
GroupSpec parse_group_arg(const std::string& arg);

// All files are JSON, schema_version 1. Values of Z_p and exponents are
// decimal strings so readers without 64-bit-exact numbers stay correct.
// Matrices are row-major nested arrays; over a group ring each entry is the
// length-m coefficient array in the enumeration order recorded in the params
// file, over plain Z_p each entry is a single decimal string.
void write_params(const std::filesystem::path& path, const PublicParams& params);
PublicParams read_params(const std::filesystem::path& path);

// params_path is recorded verbatim in params_ref together with the hash of
// that file's bytes; include_private adds x, y, K.
void write_transcript(const std::filesystem::path& path, const Transcript& t,
                      const std::string& params_path, bool include_private);
// Resolves params_ref (relative paths are tried next to the transcript
// first), verifies the hash, and returns the fully loaded transcript.
Transcript read_transcript(const std::filesystem::path& path);

void write_success_report(const std::filesystem::path& path, const PublicParams& params,
                          const AttackResult& result, std::optional<bool> match);
void write_failure_report(const std::filesystem::path& path, std::size_t system_size,
                          const std::string& error);

} // namespace makekex
