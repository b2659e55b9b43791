// Copyright 2026 The sectopk Authors
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


#include "sectopk/sectopk.h"

#include <exception>
#include <new>
#include <string>

#include "sectopk/authenticity.hpp"
#include "sectopk/bytes.hpp"
#include "sectopk/ec.hpp"
#include "sectopk/error.hpp"
#include "sectopk/scenario.hpp"
#include "sectopk/sim.hpp"
#include "sectopk/stego.hpp"
#include "sectopk/tools.hpp"

struct stk_buffer {
  std::vector<std::uint8_t> bytes;  // text buffers carry one extra NUL
  std::size_t size = 0;
};

struct stk_scenario {
  sectopk::sim::ScenarioConfig config;
};

struct stk_report {
  sectopk::sim::RunReport report;
};

struct stk_curve {
  sectopk::ec::CurveParams params;
};

struct stk_keypair {
  sectopk::ec::KeyPair keys;
};

namespace {

using sectopk::ErrorCode;

thread_local std::string g_last_error;

stk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return STK_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidCurve: return STK_ERR_INVALID_CURVE;
    case ErrorCode::CurveTooLarge: return STK_ERR_CURVE_TOO_LARGE;
    case ErrorCode::NegativeScalar: return STK_ERR_NEGATIVE_SCALAR;
    case ErrorCode::EncodingFailure: return STK_ERR_ENCODING_FAILURE;
    case ErrorCode::InfinityPoint: return STK_ERR_INFINITY_POINT;
    case ErrorCode::EmptyKey: return STK_ERR_EMPTY_KEY;
    case ErrorCode::EmptyBatch: return STK_ERR_EMPTY_BATCH;
    case ErrorCode::DuplicateSigner: return STK_ERR_DUPLICATE_SIGNER;
    case ErrorCode::MissingSigner: return STK_ERR_MISSING_SIGNER;
    case ErrorCode::NonAsciiCharacter: return STK_ERR_NON_ASCII;
    case ErrorCode::LengthMismatch: return STK_ERR_LENGTH_MISMATCH;
    case ErrorCode::MalformedFrame: return STK_ERR_MALFORMED_FRAME;
    case ErrorCode::MalformedHeader: return STK_ERR_MALFORMED_HEADER;
    case ErrorCode::MalformedImage: return STK_ERR_MALFORMED_IMAGE;
    case ErrorCode::InsufficientCapacity: return STK_ERR_INSUFFICIENT_CAPACITY;
    case ErrorCode::ConfigError: return STK_ERR_CONFIG;
    case ErrorCode::Io: return STK_ERR_IO;
  }
  return STK_ERR_INTERNAL;
}

stk_status fail_with(stk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into a status and the thread-local message.
template <typename Fn>
stk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return STK_OK;
  } catch (const sectopk::Error& e) {
    return fail_with(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(STK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(STK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail_with(STK_ERR_INTERNAL, "unknown error");
  }
}

stk_buffer* make_text(const std::string& text) {
  auto* buf = new stk_buffer;
  buf->bytes.assign(text.begin(), text.end());
  buf->bytes.push_back(0);
  buf->size = text.size();
  return buf;
}

stk_buffer* make_bytes(std::vector<std::uint8_t> bytes) {
  auto* buf = new stk_buffer;
  buf->size = bytes.size();
  buf->bytes = std::move(bytes);
  return buf;
}

}  // namespace

#define STK_REQUIRE(cond)                                                     \
  do {                                                                        \
    if (!(cond)) return fail_with(STK_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

extern "C" {

const char* stk_version(void) { return "1.0.0"; }

const char* stk_status_string(stk_status status) {
  switch (status) {
    case STK_OK: return "ok";
    case STK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case STK_ERR_INVALID_CURVE: return "invalid curve";
    case STK_ERR_CURVE_TOO_LARGE: return "curve too large";
    case STK_ERR_NEGATIVE_SCALAR: return "negative scalar";
    case STK_ERR_ENCODING_FAILURE: return "encoding failure";
    case STK_ERR_INFINITY_POINT: return "point at infinity";
    case STK_ERR_EMPTY_KEY: return "empty key";
    case STK_ERR_EMPTY_BATCH: return "empty batch";
    case STK_ERR_DUPLICATE_SIGNER: return "duplicate signer";
    case STK_ERR_MISSING_SIGNER: return "missing signer";
    case STK_ERR_NON_ASCII: return "non-ascii character";
    case STK_ERR_LENGTH_MISMATCH: return "length mismatch";
    case STK_ERR_MALFORMED_FRAME: return "malformed frame";
    case STK_ERR_MALFORMED_HEADER: return "malformed header";
    case STK_ERR_MALFORMED_IMAGE: return "malformed image";
    case STK_ERR_INSUFFICIENT_CAPACITY: return "insufficient capacity";
    case STK_ERR_CONFIG: return "config error";
    case STK_ERR_IO: return "i/o error";
    case STK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* stk_last_error(void) { return g_last_error.c_str(); }

const uint8_t* stk_buffer_data(const stk_buffer* buf) {
  return buf ? buf->bytes.data() : nullptr;
}

size_t stk_buffer_size(const stk_buffer* buf) { return buf ? buf->size : 0; }

void stk_buffer_free(stk_buffer* buf) { delete buf; }

stk_status stk_keys_table(stk_buffer** out) {
  STK_REQUIRE(out);
  return guarded([&] { *out = make_text(sectopk::tools::keys_table()); });
}

stk_status stk_curve_points_csv(uint64_t p, int64_t a, int64_t b, stk_buffer** out) {
  STK_REQUIRE(out);
  return guarded([&] { *out = make_text(sectopk::tools::curve_points_csv(p, a, b)); });
}

stk_status stk_demo(const char* text, size_t len, uint64_t seed, stk_buffer** out, int* matched) {
  STK_REQUIRE(out);
  STK_REQUIRE(text || len == 0);
  return guarded([&] {
    const std::string_view input = len == 0 ? std::string_view{} : std::string_view(text, len);
    const auto result = sectopk::tools::demo(input, seed);
    if (matched) *matched = result.recovered == input ? 1 : 0;
    *out = make_text(result.transcript);
  });
}

stk_status stk_scenario_load_file(const char* path, stk_scenario** out) {
  STK_REQUIRE(path);
  STK_REQUIRE(out);
  return guarded([&] { *out = new stk_scenario{sectopk::sim::load_config(path)}; });
}

stk_status stk_scenario_parse(const char* text, size_t len, stk_scenario** out) {
  STK_REQUIRE(text || len == 0);
  STK_REQUIRE(out);
  return guarded([&] {
    const std::string_view input = len == 0 ? std::string_view{} : std::string_view(text, len);
    *out = new stk_scenario{sectopk::sim::parse_config(input)};
  });
}

stk_status stk_scenario_set_seed(stk_scenario* scenario, uint64_t master_seed) {
  STK_REQUIRE(scenario);
  scenario->config.master_seed = master_seed;
  return STK_OK;
}

stk_status stk_scenario_run(const stk_scenario* scenario, stk_report** out) {
  STK_REQUIRE(scenario);
  STK_REQUIRE(out);
  return guarded([&] { *out = new stk_report{sectopk::sim::run_scenario(scenario->config)}; });
}

void stk_scenario_free(stk_scenario* scenario) { delete scenario; }

stk_status stk_report_text(const stk_report* report, int summary_only, stk_buffer** out) {
  STK_REQUIRE(report);
  STK_REQUIRE(out);
  return guarded([&] {
    *out = make_text(summary_only ? report->report.summary_text() : report->report.text());
  });
}

size_t stk_report_detection_count(const stk_report* r) { return r ? r->report.summary.detections : 0; }
size_t stk_report_tamper_count(const stk_report* r) { return r ? r->report.summary.tamper_events : 0; }
size_t stk_report_tamper_detected(const stk_report* r) { return r ? r->report.summary.tamper_detected : 0; }
size_t stk_report_false_alarm_count(const stk_report* r) { return r ? r->report.summary.false_alarms : 0; }
size_t stk_report_query_count(const stk_report* r) { return r ? r->report.summary.queries : 0; }
size_t stk_report_queries_correct(const stk_report* r) { return r ? r->report.summary.queries_correct : 0; }

void stk_report_free(stk_report* report) { delete report; }

stk_status stk_curve_standard(stk_curve** out) {
  STK_REQUIRE(out);
  return guarded([&] { *out = new stk_curve{sectopk::ec::CurveParams::standard()}; });
}

stk_status stk_curve_tiny(stk_curve** out) {
  STK_REQUIRE(out);
  return guarded([&] { *out = new stk_curve{sectopk::ec::CurveParams::tiny()}; });
}

stk_status stk_curve_create(uint64_t p, int64_t a, int64_t b, stk_curve** out) {
  STK_REQUIRE(out);
  return guarded([&] {
    *out = new stk_curve{sectopk::ec::CurveParams::derive(sectopk::ec::Curve::create(p, a, b))};
  });
}

uint64_t stk_curve_prime(const stk_curve* c) { return c ? c->params.curve().p() : 0; }
uint64_t stk_curve_order(const stk_curve* c) { return c ? c->params.order() : 0; }
uint64_t stk_curve_max_value(const stk_curve* c) {
  return c ? sectopk::ec::max_encodable(c->params.curve()) : 0;
}

void stk_curve_free(stk_curve* curve) { delete curve; }

stk_status stk_keypair_generate(const stk_curve* curve, uint64_t seed, stk_keypair** out) {
  STK_REQUIRE(curve);
  STK_REQUIRE(out);
  return guarded([&] { *out = new stk_keypair{sectopk::ec::keygen(curve->params, seed)}; });
}

void stk_keypair_free(stk_keypair* keypair) { delete keypair; }

stk_status stk_encrypt_value(const stk_curve* curve, const stk_keypair* recipient, uint64_t value,
                             uint64_t seed, stk_buffer** out) {
  STK_REQUIRE(curve);
  STK_REQUIRE(recipient);
  STK_REQUIRE(out);
  return guarded([&] {
    const auto& params = curve->params;
    const auto message = sectopk::ec::encode_message(value, params.curve());
    const auto ct = sectopk::ec::encrypt(message, recipient->keys.public_key, params, seed);
    const std::size_t width = params.curve().coordinate_width();
    sectopk::ByteWriter w;
    w.point(ct.c1, width);
    w.point(ct.c2, width);
    *out = make_bytes(w.take());
  });
}

stk_status stk_decrypt_value(const stk_curve* curve, const stk_keypair* recipient,
                             const uint8_t* ciphertext, size_t len, uint64_t* value) {
  STK_REQUIRE(curve);
  STK_REQUIRE(recipient);
  STK_REQUIRE(ciphertext || len == 0);
  STK_REQUIRE(value);
  return guarded([&] {
    const auto& c = curve->params.curve();
    const std::size_t width = c.coordinate_width();
    if (len != 4 * width) {
      sectopk::fail(ErrorCode::LengthMismatch,
                    "ciphertext must be " + std::to_string(4 * width) + " bytes");
    }
    sectopk::ByteReader r(std::span<const std::uint8_t>(ciphertext, len));
    sectopk::ec::CipherPair ct;
    ct.c1 = r.point(width);
    ct.c2 = r.point(width);
    if (!c.contains(ct.c1) || !c.contains(ct.c2)) {
      sectopk::fail(ErrorCode::InvalidArgument, "ciphertext point is not on the curve");
    }
    *value = sectopk::ec::decode_message(sectopk::ec::decrypt(recipient->keys.secret, ct, c));
  });
}

stk_status stk_mac_digest(const uint8_t* key, size_t key_len, const uint8_t* msg, size_t msg_len,
                          uint8_t out[STK_MAC_SIZE]) {
  STK_REQUIRE(key || key_len == 0);
  STK_REQUIRE(msg || msg_len == 0);
  STK_REQUIRE(out);
  return guarded([&] {
    const auto tag = sectopk::auth::mac_digest(std::span<const std::uint8_t>(msg, msg_len),
                                               std::span<const std::uint8_t>(key, key_len));
    std::copy(tag.bytes.begin(), tag.bytes.end(), out);
  });
}

stk_status stk_mac_verify(const uint8_t* key, size_t key_len, const uint8_t* msg, size_t msg_len,
                          const uint8_t* tag, size_t tag_len, int* valid) {
  STK_REQUIRE(key || key_len == 0);
  STK_REQUIRE(msg || msg_len == 0);
  STK_REQUIRE(tag || tag_len == 0);
  STK_REQUIRE(valid);
  return guarded([&] {
    sectopk::auth::MacTag t{sectopk::Bytes(tag, tag + tag_len)};
    *valid = sectopk::auth::mac_verify(std::span<const std::uint8_t>(msg, msg_len),
                                       std::span<const std::uint8_t>(key, key_len), t)
                 ? 1
                 : 0;
  });
}

stk_status stk_stego_cover(uint32_t width, uint32_t height, uint64_t seed, stk_buffer** out_ppm) {
  STK_REQUIRE(out_ppm);
  return guarded([&] {
    *out_ppm = make_bytes(
        sectopk::stego::write_ppm(sectopk::stego::StegoImage::synthetic(width, height, seed)));
  });
}

stk_status stk_stego_embed(const uint8_t* ppm, size_t ppm_len, const uint8_t* data,
                           size_t data_len, stk_buffer** out_ppm) {
  STK_REQUIRE(ppm || ppm_len == 0);
  STK_REQUIRE(data || data_len == 0);
  STK_REQUIRE(out_ppm);
  return guarded([&] {
    const auto cover = sectopk::stego::read_ppm(std::span<const std::uint8_t>(ppm, ppm_len));
    const auto stego =
        sectopk::stego::embed_lsb(cover, std::span<const std::uint8_t>(data, data_len));
    *out_ppm = make_bytes(sectopk::stego::write_ppm(stego));
  });
}

stk_status stk_stego_extract(const uint8_t* ppm, size_t ppm_len, stk_buffer** out) {
  STK_REQUIRE(ppm || ppm_len == 0);
  STK_REQUIRE(out);
  return guarded([&] {
    const auto img = sectopk::stego::read_ppm(std::span<const std::uint8_t>(ppm, ppm_len));
    *out = make_bytes(sectopk::stego::extract_lsb(img));
  });
}

}  // extern "C"
