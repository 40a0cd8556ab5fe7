#include "gvcot/judge/client.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "gvcot/util/base64.hpp"
#include "gvcot/util/png_io.hpp"

namespace gvcot::judge {
namespace {

using nlohmann::json;

std::string extract_content(const std::string& body) {
    const json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) {
        throw QueryError(QueryError::Kind::Transport, 0, "malformed response body");
    }
    if (!doc.contains("choices") || !doc["choices"].is_array() || doc["choices"].empty()) {
        throw QueryError(QueryError::Kind::Transport, 0, "response has no choices");
    }
    const json& msg = doc["choices"][0].value("message", json::object());
    const json content = msg.value("content", json());
    if (content.is_string()) {
        return content.get<std::string>();
    }
    if (content.is_array()) {
        // tolerate part-structured content: concatenate the text parts
        std::string text;
        for (const json& part : content) {
            if (part.is_object() && part.value("type", "") == "text") {
                text += part.value("text", "");
            }
        }
        return text;
    }
    throw QueryError(QueryError::Kind::Transport, 0, "response content missing");
}

bool retryable_status(int status) {
    return status == 429 || (status >= 500 && status < 600);
}

} // namespace

EndpointConfig EndpointConfig::from_env(std::string base_url, std::string model_name) {
    EndpointConfig cfg;
    cfg.base_url = std::move(base_url);
    cfg.model_name = std::move(model_name);
    if (const char* key = std::getenv("GVCOT_JUDGE_API_KEY")) {
        cfg.api_key = key;
    }
    return cfg;
}

std::string build_request_json(const EndpointConfig& cfg, const std::vector<Message>& messages) {
    json req;
    req["model"] = cfg.model_name;
    req["temperature"] = cfg.temperature;
    json msgs = json::array();
    for (const Message& m : messages) {
        json parts = json::array();
        for (const MessagePart& p : m.parts) {
            if (p.kind == MessagePart::Kind::Text) {
                parts.push_back({{"type", "text"}, {"text", p.text}});
            } else {
                const auto png = encode_png(*p.image);
                parts.push_back({{"type", "image"}, {"image", base64_encode(png)}});
            }
        }
        msgs.push_back({{"role", m.role}, {"content", std::move(parts)}});
    }
    req["messages"] = std::move(msgs);
    return req.dump();
}

JudgeClient::JudgeClient(EndpointConfig cfg) : cfg_(std::move(cfg)) {
    jitter_state_ = 0x9E3779B97F4A7C15ULL ^ std::hash<std::string>{}(cfg_.base_url);
}

JudgeClient::~JudgeClient() = default;

void JudgeClient::acquire_slot() {
    std::unique_lock lock(mutex_);
    slot_free_.wait(lock, [&] { return in_flight_ < cfg_.max_in_flight; });
    ++in_flight_;
}

void JudgeClient::release_slot() {
    {
        std::lock_guard lock(mutex_);
        --in_flight_;
    }
    slot_free_.notify_one();
}

std::string JudgeClient::query(const std::vector<Message>& messages) {
    acquire_slot();
    struct SlotGuard {
        JudgeClient* c;
        ~SlotGuard() { c->release_slot(); }
    } guard{this};

    const std::string body = build_request_json(cfg_, messages);

    httplib::Client client(cfg_.base_url);
    client.set_connection_timeout(std::chrono::milliseconds(
        static_cast<long long>(cfg_.timeout_s * 1000)));
    client.set_read_timeout(std::chrono::milliseconds(
        static_cast<long long>(cfg_.timeout_s * 1000)));
    httplib::Headers headers;
    if (!cfg_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + cfg_.api_key);
    }

    std::optional<QueryError> last_error;
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
        if (attempt > 0) {
            double jitter;
            {
                std::lock_guard lock(mutex_);
                jitter_state_ = jitter_state_ * 6364136223846793005ULL + 1442695040888963407ULL;
                jitter = 0.5 + static_cast<double>(jitter_state_ >> 40) /
                                   static_cast<double>(1ULL << 24);
            }
            const double delay_s =
                cfg_.backoff_base_s * std::pow(2.0, attempt - 1) * jitter;
            std::this_thread::sleep_for(std::chrono::duration<double>(delay_s));
        }

        auto res = client.Post(cfg_.path, headers, body, "application/json");
        if (!res) {
            const auto err = res.error();
            const bool timeout = err == httplib::Error::ConnectionTimeout;
            last_error = QueryError(timeout ? QueryError::Kind::Timeout
                                            : QueryError::Kind::Transport,
                                    0, "transport error: " + httplib::to_string(err));
            continue;
        }
        if (res->status == 200) {
            return extract_content(res->body);
        }
        last_error = QueryError(QueryError::Kind::BadStatus, res->status,
                                "endpoint returned status " + std::to_string(res->status));
        if (!retryable_status(res->status)) {
            throw *last_error;
        }
    }
    throw *last_error;
}

std::string query_judge(const EndpointConfig& cfg, const std::vector<Message>& messages) {
    JudgeClient client(cfg);
    return client.query(messages);
}

} // namespace gvcot::judge
