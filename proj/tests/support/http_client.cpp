#include "http_client.hpp"

#include <httplib.h>

namespace kgwb::testing {

struct HttpClient::Impl {
    Impl(const std::string& host, int port) : client(host, port) {
        client.set_read_timeout(10, 0);
        client.set_connection_timeout(5, 0);
    }
    httplib::Client client;
};

namespace {

HttpResponse convert(const httplib::Result& result) {
    HttpResponse out;
    if (!result) return out;
    out.status = result->status;
    out.body = result->body;
    out.content_type = result->get_header_value("Content-Type");
    out.graph_version_header = result->get_header_value("X-Graph-Version");
    return out;
}

}  // namespace

HttpClient::HttpClient(const std::string& host, int port) : impl_(std::make_unique<Impl>(host, port)) {}
HttpClient::~HttpClient() = default;

HttpResponse HttpClient::get(const std::string& path) { return convert(impl_->client.Get(path)); }

HttpResponse HttpClient::post(const std::string& path, const std::string& body, const std::string& content_type) {
    return convert(impl_->client.Post(path, body, content_type));
}

HttpResponse HttpClient::put(const std::string& path, const Json& body) {
    return convert(impl_->client.Put(path, body.dump(), "application/json"));
}

HttpResponse HttpClient::del(const std::string& path) { return convert(impl_->client.Delete(path)); }

int HttpClient::stream(const std::string& path, const std::function<bool(const std::string&)>& on_chunk) {
    auto result = impl_->client.Get(path, [&](const char* data, std::size_t len) {
        return on_chunk(std::string(data, len));
    });
    // A receiver that stops early makes httplib report Canceled.
    if (!result) return result.error() == httplib::Error::Canceled ? 200 : 0;
    return result->status;
}

}  // namespace kgwb::testing
