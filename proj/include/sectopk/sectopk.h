/* Copyright 2026 The sectopk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libsectopk.
 *
 * Every fallible call returns stk_status. On failure the thread-local
 * message from stk_last_error() describes it; out-parameters are untouched.
 * Objects returned through out-parameters are owned by the caller and must
 * be released with the matching *_free function (NULL is accepted).
 */

#ifndef SECTOPK_SECTOPK_H
#define SECTOPK_SECTOPK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SECTOPK_BUILDING_LIBRARY)
#    define SECTOPK_API __declspec(dllexport)
#  else
#    define SECTOPK_API __declspec(dllimport)
#  endif
#else
#  define SECTOPK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stk_status {
  STK_OK = 0,
  STK_ERR_INVALID_ARGUMENT = 1,
  STK_ERR_INVALID_CURVE = 2,
  STK_ERR_CURVE_TOO_LARGE = 3,
  STK_ERR_NEGATIVE_SCALAR = 4,
  STK_ERR_ENCODING_FAILURE = 5,
  STK_ERR_INFINITY_POINT = 6,
  STK_ERR_EMPTY_KEY = 7,
  STK_ERR_EMPTY_BATCH = 8,
  STK_ERR_DUPLICATE_SIGNER = 9,
  STK_ERR_MISSING_SIGNER = 10,
  STK_ERR_NON_ASCII = 11,
  STK_ERR_LENGTH_MISMATCH = 12,
  STK_ERR_MALFORMED_FRAME = 13,
  STK_ERR_MALFORMED_HEADER = 14,
  STK_ERR_MALFORMED_IMAGE = 15,
  STK_ERR_INSUFFICIENT_CAPACITY = 16,
  STK_ERR_CONFIG = 17,
  STK_ERR_IO = 18,
  STK_ERR_INTERNAL = 99
} stk_status;

#define STK_MAC_SIZE 32

typedef struct stk_buffer stk_buffer;
typedef struct stk_scenario stk_scenario;
typedef struct stk_report stk_report;
typedef struct stk_curve stk_curve;
typedef struct stk_keypair stk_keypair;

SECTOPK_API const char* stk_version(void);
SECTOPK_API const char* stk_status_string(stk_status status);
/* Message for the last failure on this thread; "" if none. */
SECTOPK_API const char* stk_last_error(void);

/* Byte buffers. Text results are NUL terminated; size excludes the NUL. */
SECTOPK_API const uint8_t* stk_buffer_data(const stk_buffer* buf);
SECTOPK_API size_t stk_buffer_size(const stk_buffer* buf);
SECTOPK_API void stk_buffer_free(stk_buffer* buf);

/* Tools. */
SECTOPK_API stk_status stk_keys_table(stk_buffer** out);
SECTOPK_API stk_status stk_curve_points_csv(uint64_t p, int64_t a, int64_t b, stk_buffer** out);
/* On success *out holds the transcript; *matched is 1 when the text survived. */
SECTOPK_API stk_status stk_demo(const char* text, size_t len, uint64_t seed, stk_buffer** out,
                                int* matched);

/* Scenarios. */
SECTOPK_API stk_status stk_scenario_load_file(const char* path, stk_scenario** out);
SECTOPK_API stk_status stk_scenario_parse(const char* text, size_t len, stk_scenario** out);
SECTOPK_API stk_status stk_scenario_set_seed(stk_scenario* scenario, uint64_t master_seed);
SECTOPK_API stk_status stk_scenario_run(const stk_scenario* scenario, stk_report** out);
SECTOPK_API void stk_scenario_free(stk_scenario* scenario);

SECTOPK_API stk_status stk_report_text(const stk_report* report, int summary_only,
                                       stk_buffer** out);
SECTOPK_API size_t stk_report_detection_count(const stk_report* report);
SECTOPK_API size_t stk_report_tamper_count(const stk_report* report);
SECTOPK_API size_t stk_report_tamper_detected(const stk_report* report);
SECTOPK_API size_t stk_report_false_alarm_count(const stk_report* report);
SECTOPK_API size_t stk_report_query_count(const stk_report* report);
SECTOPK_API size_t stk_report_queries_correct(const stk_report* report);
SECTOPK_API void stk_report_free(stk_report* report);

/* Curves and ElGamal on single values. */
SECTOPK_API stk_status stk_curve_standard(stk_curve** out);
SECTOPK_API stk_status stk_curve_tiny(stk_curve** out);
/* Derives order and base point; expensive for large p. */
SECTOPK_API stk_status stk_curve_create(uint64_t p, int64_t a, int64_t b, stk_curve** out);
SECTOPK_API uint64_t stk_curve_prime(const stk_curve* curve);
SECTOPK_API uint64_t stk_curve_order(const stk_curve* curve);
SECTOPK_API uint64_t stk_curve_max_value(const stk_curve* curve);
SECTOPK_API void stk_curve_free(stk_curve* curve);

SECTOPK_API stk_status stk_keypair_generate(const stk_curve* curve, uint64_t seed,
                                            stk_keypair** out);
SECTOPK_API void stk_keypair_free(stk_keypair* keypair);

/* Ciphertext bytes: Ci1 then Ci2, fixed-width big-endian coordinates. */
SECTOPK_API stk_status stk_encrypt_value(const stk_curve* curve, const stk_keypair* recipient,
                                         uint64_t value, uint64_t seed, stk_buffer** out);
SECTOPK_API stk_status stk_decrypt_value(const stk_curve* curve, const stk_keypair* recipient,
                                         const uint8_t* ciphertext, size_t len,
                                         uint64_t* value);

/* HMAC-SHA256. */
SECTOPK_API stk_status stk_mac_digest(const uint8_t* key, size_t key_len, const uint8_t* msg,
                                      size_t msg_len, uint8_t out[STK_MAC_SIZE]);
SECTOPK_API stk_status stk_mac_verify(const uint8_t* key, size_t key_len, const uint8_t* msg,
                                      size_t msg_len, const uint8_t* tag, size_t tag_len,
                                      int* valid);

/* LSB steganography on binary PPM (P6) images. */
SECTOPK_API stk_status stk_stego_cover(uint32_t width, uint32_t height, uint64_t seed,
                                       stk_buffer** out_ppm);
SECTOPK_API stk_status stk_stego_embed(const uint8_t* ppm, size_t ppm_len, const uint8_t* data,
                                       size_t data_len, stk_buffer** out_ppm);
SECTOPK_API stk_status stk_stego_extract(const uint8_t* ppm, size_t ppm_len, stk_buffer** out);

#ifdef __cplusplus
}
#endif

#endif /* SECTOPK_SECTOPK_H */
