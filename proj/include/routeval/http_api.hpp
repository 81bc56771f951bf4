#pragma once

#include <httplib.h>

#include "routeval/session.hpp"

namespace routeval {

/// Installs the session endpoints on `server`. The store must outlive it.
/// Sessions created without a config start from `defaults`.
///
///   POST /sessions                    {scenario, config?} -> {session_id, state}
///   GET  /sessions/{id}/state
///   POST /sessions/{id}/advance       {deviation?: {offset_nmi, bearing_deg}, waypoint?: {lat, lon}}
///   GET  /sessions/{id}/prediction
///   POST /sessions/{id}/whatif        {turn_points: [...]}
///   GET  /sessions/{id}/image.svg
void register_routes(httplib::Server& server, SessionStore& store, const EvalConfig& defaults = {});

}  // namespace routeval
