#pragma once

#include <condition_variable>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvcot/judge/messages.hpp"

namespace gvcot::judge {

/// Connection settings for a chat-completion-style endpoint. The API key
/// comes from the GVCOT_JUDGE_API_KEY environment variable.
struct EndpointConfig {
    std::string base_url;     // e.g. "http://127.0.0.1:8099"
    std::string model_name;
    std::string api_key;
    std::string path = "/v1/chat/completions";
    double timeout_s = 120.0;
    int max_retries = 3;
    int max_in_flight = 8;
    double temperature = 0.0;
    double backoff_base_s = 1.0; // doubled per retry, with jitter

    static EndpointConfig from_env(std::string base_url, std::string model_name);
};

struct QueryError : std::runtime_error {
    enum class Kind { Timeout, Transport, BadStatus };
    QueryError(Kind k, int status_code, const std::string& message)
        : std::runtime_error(message), kind(k), status(status_code) {}
    Kind kind;
    int status = 0; // set for BadStatus
};

/// Client for one endpoint. Bounded to cfg.max_in_flight concurrent requests;
/// safe to share across worker threads.
class JudgeClient {
public:
    explicit JudgeClient(EndpointConfig cfg);
    ~JudgeClient();

    JudgeClient(const JudgeClient&) = delete;
    JudgeClient& operator=(const JudgeClient&) = delete;

    /// Sends the messages and returns the first choice's text. Retries
    /// transport errors and 429/5xx with exponential backoff; throws
    /// QueryError once the retry budget is exhausted.
    std::string query(const std::vector<Message>& messages);

    const EndpointConfig& config() const { return cfg_; }

private:
    void acquire_slot();
    void release_slot();

    EndpointConfig cfg_;
    std::mutex mutex_;
    std::condition_variable slot_free_;
    int in_flight_ = 0;
    std::uint64_t jitter_state_;
};

/// One-shot convenience wrapper around JudgeClient.
std::string query_judge(const EndpointConfig& cfg, const std::vector<Message>& messages);

/// Request body in the wire format: {model, messages[{role, content[{type:
/// text|image, ...}]}], temperature}. Exposed for tests.
std::string build_request_json(const EndpointConfig& cfg, const std::vector<Message>& messages);

} // namespace gvcot::judge
