#include "routeval/http_api.hpp"

#include <fmt/core.h>

namespace routeval {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message, const std::string& path = {}) {
  json body{{"error", message}, {"status", status}};
  if (!path.empty()) body["path"] = path;
  send_json(res, status, body);
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json(nullptr);
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw ServiceError(400, fmt::format("request body is not valid JSON: {}", e.what()));
  }
}

/// Runs a handler, mapping failures onto status codes.
template <typename Handler>
void guarded(httplib::Response& res, Handler&& handler) {
  try {
    handler();
  } catch (const ServiceError& e) {
    send_error(res, e.status(), e.what(), e.path());
  } catch (const ScenarioError& e) {
    send_error(res, 422, e.what(), e.path());
  } catch (const std::invalid_argument& e) {
    send_error(res, 422, e.what());
  } catch (const json::exception& e) {
    send_error(res, 422, e.what());
  } catch (const std::exception& e) {
    send_error(res, 500, e.what());
  }
}

std::vector<std::string> turn_tokens(const json& body) {
  if (!body.is_object() || !body.contains("turn_points") || !body["turn_points"].is_array()) {
    throw ServiceError(422, "turn_points must be an array", "/turn_points");
  }
  std::vector<std::string> tokens;
  for (const auto& t : body["turn_points"]) {
    if (t.is_string()) {
      tokens.push_back(t.get<std::string>());
    } else if (t.is_number_unsigned()) {
      tokens.push_back(std::to_string(t.get<std::size_t>()));
    } else {
      throw ServiceError(422, "turn points are waypoint names or non-negative indices", "/turn_points");
    }
  }
  return tokens;
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store, const EvalConfig& defaults) {
  // Unmatched paths and methods get a JSON body like every other error.
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    send_error(res, res.status, fmt::format("no resource for {} {}", req.method, req.path));
    return httplib::Server::HandlerResponse::Handled;
  });

  server.Post("/sessions", [&store, defaults](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = parse_body(req);
      if (!body.is_object()) throw ServiceError(422, "body must be an object holding a scenario");
      const json& doc = body.contains("scenario") ? body["scenario"] : body;
      Scenario scenario = [&] {
        try {
          return load_scenario(doc);
        } catch (const ScenarioError& e) {
          throw ServiceError(422, e.what(), "/scenario" + e.path());
        }
      }();
      EvalConfig config = eval_config_from_json(body.contains("config") ? body["config"] : json(nullptr), defaults);
      const auto session = store.create(std::move(scenario), config);
      send_json(res, 201, {{"session_id", session->id()}, {"state", state_json(*session->view())}});
    });
  });

  server.Get(R"(/sessions/([^/]+)/state)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, state_json(*store.get(req.matches[1])->view())); });
  });

  server.Post(R"(/sessions/([^/]+)/advance)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const std::string id = req.matches[1];
      store.get(id);  // unknown sessions answer 404 before the body is looked at
      const AdvanceRequest request = AdvanceRequest::from_json(parse_body(req));
      send_json(res, 200, state_json(*store.advance(id, request)));
    });
  });

  server.Get(R"(/sessions/([^/]+)/prediction)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, prediction_json(*store.get(req.matches[1])->view())); });
  });

  server.Post(R"(/sessions/([^/]+)/whatif)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto view = store.get(req.matches[1])->view();
      const auto tokens = turn_tokens(parse_body(req));
      send_json(res, 200, to_json(run_whatif(*view->scenario, tokens, view->config)));
    });
  });

  server.Get(R"(/sessions/([^/]+)/image.svg)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto view = store.get(req.matches[1])->view();
      res.status = 200;
      res.set_content(image_svg(*view), "image/svg+xml");
    });
  });
}

}  // namespace routeval
