// Copyright 2026 The Jatran Authors
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

#include "jatran/correct.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "jatran/errors.hpp"

namespace jatran::correct {

namespace {

constexpr std::string_view kGecTemplate =
    "Please identify and correct any grammatical and spelling errors in the "
    "following sentence marked with the tag <input> SRC </input>. Make the "
    "minimal changes necessary to correct the sentence. Do not rephrase any "
    "parts of the sentence that are already grammatically correct, and avoid "
    "altering the meaning by adding or removing information. After making the "
    "corrections, output the revised sentence directly without providing any "
    "explanations. Remember to format the corrected output with the tag "
    "<output> Your Corrected Version </output>.";

constexpr std::string_view kTransliterationTemplate =
    "You are a transliteration system that can transliterate Judeo-Arabic "
    "text to Arabic. Please transliterate the following Judeo-Arabic sentence "
    "to Arabic without providing any explanation. The output should be in "
    "Arabic script.";

constexpr std::string_view kTranslationTemplate =
    "You are a machine translation system that can translate Arabic to "
    "English. Please translate the following Arabic sentence to English "
    "without providing any explanation.";

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool retryable_status(int status) {
  return status == 408 || status == 429 || status >= 500;
}

struct SplitUrl {
  std::string base;  // scheme://host[:port]
  std::string path;  // /v1/...
};

SplitUrl split_url(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("backend URL must include a scheme: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

std::optional<PromptTemplate> template_from_name(std::string_view name) {
  if (name == "gec") return PromptTemplate::gec;
  if (name == "transliteration") return PromptTemplate::transliteration;
  if (name == "translation") return PromptTemplate::translation;
  return std::nullopt;
}

std::string build_prompt(const CorrectionRequest& request) {
  if (trim(request.text).empty()) {
    throw EmptyText("correction request has empty text");
  }
  switch (request.prompt_template) {
    case PromptTemplate::gec: {
      std::string prompt(kGecTemplate);
      const std::string_view slot = "SRC";
      const std::size_t pos = prompt.find(slot);
      prompt.replace(pos, slot.size(), request.text);
      return prompt;
    }
    case PromptTemplate::transliteration:
      return std::string(kTransliterationTemplate) + "\n\n" + request.text;
    case PromptTemplate::translation:
      return std::string(kTranslationTemplate) + "\n\n" + request.text;
  }
  throw UnknownTemplate("unknown prompt template");
}

std::optional<std::string> extract_tagged_output(std::string_view raw) {
  constexpr std::string_view kOpen = "<output>";
  constexpr std::string_view kClose = "</output>";
  const std::size_t open = raw.find(kOpen);
  if (open == std::string_view::npos) return std::nullopt;
  const std::size_t begin = open + kOpen.size();
  const std::size_t close = raw.find(kClose, begin);
  if (close == std::string_view::npos) return std::nullopt;
  return trim(raw.substr(begin, close - begin));
}

std::string wrap_tagged_output(std::string_view text) {
  return "<output> " + std::string(text) + " </output>";
}

std::string fnv1a64_hex(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

CorrectionResponse IdentityBackend::correct(const CorrectionRequest& request) {
  if (request.text.empty()) throw EmptyText("correction request has empty text");
  return {trim(request.text), request.text, false};
}

FixtureBackend::FixtureBackend(const std::filesystem::path& tsv_path) {
  std::ifstream in(tsv_path);
  if (!in) throw ConfigError("cannot open fixture file: " + tsv_path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError(tsv_path.string() + ":" + std::to_string(line_no) +
                        ": expected `<input-or-hash> <TAB> <output>`");
    }
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    by_text_[key] = value;
    if (key.size() == 16 &&
        key.find_first_not_of("0123456789abcdef") == std::string::npos) {
      by_hash_[key] = value;
    }
  }
}

CorrectionResponse FixtureBackend::correct(const CorrectionRequest& request) {
  if (request.text.empty()) throw EmptyText("correction request has empty text");
  auto it = by_text_.find(request.text);
  if (it == by_text_.end()) {
    it = by_hash_.find(fnv1a64_hex(request.text));
    if (it == by_hash_.end()) {
      throw ConfigError("fixture has no entry for input: " + request.text);
    }
  }
  const std::string& raw = it->second;
  if (std::optional<std::string> tagged = extract_tagged_output(raw)) {
    return {*tagged, raw, true};
  }
  return {trim(raw), raw, false};
}

HttpBackend::HttpBackend(Config config) : config_(std::move(config)) {
  split_url(config_.url);  // validate eagerly
}

CorrectionResponse HttpBackend::correct(const CorrectionRequest& request) {
  const std::string prompt = build_prompt(request);

  std::string credential;
  if (!config_.api_key_env.empty()) {
    const char* value = std::getenv(config_.api_key_env.c_str());
    if (value == nullptr || *value == '\0') {
      throw AuthMissing("environment variable " + config_.api_key_env +
                        " is not set");
    }
    credential = value;
  }

  nlohmann::json body = {
      {"model", request.model_id},
      {"messages",
       nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
  };
  if (request.temperature) body["temperature"] = *request.temperature;
  if (request.top_p) body["top_p"] = *request.top_p;
  if (request.max_tokens) body["max_tokens"] = *request.max_tokens;

  const SplitUrl url = split_url(config_.url);
  httplib::Headers headers;
  if (!credential.empty()) headers.emplace("Authorization", "Bearer " + credential);

  std::string last_error;
  int backoff_ms = config_.backoff_initial_ms;
  const int attempts = request.max_retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms = std::min(backoff_ms * 2, config_.backoff_max_ms);
    }
    httplib::Client client(url.base);
    const auto timeout =
        std::chrono::milliseconds(static_cast<long>(request.timeout_seconds * 1000));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    httplib::Result res =
        client.Post(url.path, headers, body.dump(), "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (retryable_status(res->status)) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw TransportFailure("HTTP " + std::to_string(res->status) + ": " +
                             res->body);
    }
    std::string raw;
    try {
      const nlohmann::json reply = nlohmann::json::parse(res->body);
      raw = reply.at("choices").at(0).at("message").at("content")
                .get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw TransportFailure(std::string("malformed backend reply: ") +
                             e.what());
    }
    if (std::optional<std::string> tagged = extract_tagged_output(raw)) {
      return {*tagged, raw, true};
    }
    return {trim(raw), raw, false};
  }
  throw TransportFailure("backend unreachable after " +
                         std::to_string(attempts) + " attempts: " + last_error);
}

std::vector<CorrectionResponse> correct_sections(
    Backend& backend, std::span<const std::string> sections,
    const CorrectionRequest& prototype, int concurrency) {
  std::vector<CorrectionResponse> responses(sections.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= sections.size()) return;
      {
        std::scoped_lock lock(error_mutex);
        if (first_error) return;
      }
      try {
        if (sections[i].empty()) {
          responses[i] = {"", "", false};
        } else {
          CorrectionRequest req = prototype;
          req.text = sections[i];
          responses[i] = backend.correct(req);
        }
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const std::size_t n_workers = std::min<std::size_t>(
      std::max(concurrency, 1), std::max<std::size_t>(sections.size(), 1));
  std::vector<std::thread> threads;
  threads.reserve(n_workers);
  for (std::size_t k = 0; k < n_workers; ++k) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return responses;
}

}  // namespace jatran::correct
