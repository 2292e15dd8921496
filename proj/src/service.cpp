/* Copyright 2026 The Construal Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "construal/service.hpp"

#include "construal/error.hpp"
#include "httplib.h"

namespace construal {

using nlohmann::json;

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kRepeatedFunction:
    case ErrorCode::kMalformedRecord:
    case ErrorCode::kSpanOutOfRange:
      return 422;
    case ErrorCode::kUnknownTask:
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownDocument:
      return 404;
    case ErrorCode::kUnknownAnnotator:
    case ErrorCode::kTaskNotAssigned:
      return 403;
    case ErrorCode::kTaskClosed:
    case ErrorCode::kDuplicateRecord:
    case ErrorCode::kGoldExists:
      return 409;
    case ErrorCode::kIo:
      return 500;
    default:
      return 400;
  }
}

json ToJson(const Span& span) { return {{"start", span.start}, {"end", span.end}}; }

json ToJson(const TargetKey& key) {
  return {{"doc_id", key.doc_id}, {"sent_id", key.sent_id}, {"span", ToJson(key.span)}};
}

json ToJson(const AnnotationRecord& r) {
  return {{"doc_id", r.doc_id},
          {"sent_id", r.sent_id},
          {"target", ToJson(r.target)},
          {"form", r.form},
          {"annotator", r.annotator},
          {"construal", FormatConstrual(r.construal)},
          {"note", r.note}};
}

json ToJson(const TaskAssignment& task) {
  json suggested = json::array();
  for (const auto& c : task.suggested) suggested.push_back(FormatConstrual(c));
  return {{"task_id", task.task_id},
          {"doc_id", task.doc_id},
          {"sent_id", task.sent_id},
          {"span", ToJson(task.span)},
          {"form", task.form},
          {"language", task.language},
          {"tokens", task.tokens},
          {"stage", std::string(StageName(task.stage))},
          {"suggested", suggested}};
}

json ToJson(const QueueItem& item) {
  json annotations = json::array();
  for (const auto& [annotator, c] : item.annotations) {
    annotations.push_back({{"annotator", annotator}, {"construal", FormatConstrual(c)}});
  }
  return {{"target", ToJson(item.target)}, {"form", item.form}, {"annotations", annotations}};
}

json ToJson(const CorpusStats& s) {
  return {{"tokens_annotated", s.tokens_annotated},
          {"role_histogram", s.role_histogram},
          {"function_histogram", s.function_histogram},
          {"null_functions", s.null_functions},
          {"mismatches", s.mismatches},
          {"mismatch_rate", s.mismatch_rate},
          {"null_function_rate", s.null_function_rate},
          {"role_only_labels", s.role_only_labels},
          {"function_only_labels", s.function_only_labels},
          {"participant_labels_used", s.participant_labels_used},
          {"participant_labels_role_only", s.participant_labels_role_only},
          {"form_role_groups", s.form_role_groups},
          {"deterministic_groups", s.deterministic_groups},
          {"function_determinism", s.function_determinism}};
}

json ToJson(const AdpositionEntry& e) {
  json attested = json::array();
  for (const auto& a : e.attested) {
    attested.push_back({{"construal", FormatConstrual(a.construal)},
                        {"example", a.example},
                        {"source", a.source}});
  }
  return {{"language", e.language},
          {"form", e.form},
          {"kind", e.kind},
          {"native", e.native},
          {"prototypical_functions", e.prototypical_functions},
          {"attested", attested},
          {"notes", e.notes}};
}

json ToJson(const Hierarchy& h) {
  json nodes = json::array();
  for (const auto& n : h.nodes()) {
    nodes.push_back({{"name", n.name},
                     {"parents", n.parents},
                     {"definition", n.definition},
                     {"hints", n.hints},
                     {"depth", h.Depth(n.name)}});
  }
  return {{"version", h.version()}, {"roots", h.Roots()}, {"nodes", nodes}};
}

namespace {

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, std::string_view code,
               const std::string& message) {
  SendJson(res, status, {{"error", code}, {"message", message}});
}

template <typename F>
httplib::Server::Handler Guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const Error& e) {
      SendError(res, HttpStatusFor(e.code()), ErrorCodeName(e.code()), e.what());
    } catch (const json::exception& e) {
      SendError(res, 400, "bad-request", e.what());
    } catch (const std::exception& e) {
      SendError(res, 500, "internal", e.what());
    }
  };
}

json ParseBody(const httplib::Request& req) {
  json body = json::parse(req.body);
  if (!body.is_object()) throw Error(ErrorCode::kMalformedRecord, "request body must be an object");
  return body;
}

std::string Required(const json& body, const char* field) {
  const auto it = body.find(field);
  if (it == body.end() || !it->is_string()) {
    throw Error(ErrorCode::kMalformedRecord, std::string("missing string field '") + field + "'");
  }
  return it->get<std::string>();
}

}  // namespace

void RegisterRoutes(httplib::Server& server, AnnotationStore& store) {
  server.Get("/hierarchy", Guarded([&store](const httplib::Request&, httplib::Response& res) {
               SendJson(res, 200, ToJson(store.hierarchy()));
             }));

  server.Get(R"(/lexicon/([^/]+)/([^/]+))",
             Guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const std::string lang = req.matches[1];
               const std::string form = req.matches[2];
               const AdpositionEntry* e = store.lexicon().Find(lang, form);
               if (e == nullptr) {
                 throw Error(ErrorCode::kNotFound, "no lexicon entry for (" + lang + ", " + form + ")");
               }
               SendJson(res, 200, ToJson(*e));
             }));

  server.Get("/tasks/next", Guarded([&store](const httplib::Request& req, httplib::Response& res) {
               std::string annotator = req.get_param_value("annotator");
               if (annotator.empty()) annotator = req.get_header_value("X-Annotator-Id");
               if (annotator.empty()) {
                 throw Error(ErrorCode::kUnknownAnnotator, "no annotator id given");
               }
               const Stage stage = ParseStage(req.get_param_value("stage"));
               const auto task = store.NextTask(annotator, stage);
               if (!task) {
                 res.status = 204;
                 return;
               }
               SendJson(res, 200, ToJson(*task));
             }));

  server.Post("/annotations", Guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json body = ParseBody(req);
                std::string annotator = req.get_header_value("X-Annotator-Id");
                if (annotator.empty() && body.contains("annotator")) {
                  annotator = Required(body, "annotator");
                }
                if (annotator.empty()) {
                  throw Error(ErrorCode::kUnknownAnnotator, "no annotator id given");
                }
                const AnnotationRecord r = store.SubmitAnnotation(
                    annotator, Required(body, "task_id"), Required(body, "construal"));
                SendJson(res, 201, ToJson(r));
              }));

  server.Get("/disagreements", Guarded([&store](const httplib::Request&, httplib::Response& res) {
               json items = json::array();
               for (const auto& item : store.Disagreements()) items.push_back(ToJson(item));
               SendJson(res, 200, items);
             }));

  server.Post("/adjudications",
              Guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const json body = ParseBody(req);
                TargetKey key;
                key.doc_id = Required(body, "doc_id");
                key.sent_id = Required(body, "sent_id");
                const json& span = body.at("span");
                key.span = {span.at("start").get<int>(), span.at("end").get<int>()};
                const bool force = body.value("force", false);
                const AnnotationRecord r = store.SubmitAdjudication(
                    key, Required(body, "construal"), Required(body, "expert_id"), force);
                SendJson(res, 201, ToJson(r));
              }));

  server.Get("/export", Guarded([&store](const httplib::Request&, httplib::Response& res) {
               res.set_content(store.Export(), "text/tab-separated-values");
             }));

  server.Get("/stats", Guarded([&store](const httplib::Request&, httplib::Response& res) {
               SendJson(res, 200, ToJson(store.Stats()));
             }));
}

}  // namespace construal
