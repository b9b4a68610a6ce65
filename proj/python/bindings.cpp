#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sftlock/baseline.hpp"
#include "sftlock/cost.hpp"
#include "sftlock/engine.hpp"
#include "sftlock/journal.hpp"
#include "sftlock/replay.hpp"
#include "sftlock/scenario.hpp"

namespace py = pybind11;
using namespace sftlock;
namespace sc = sftlock::scenario;

namespace {

PyObject* g_ledger_error = nullptr;

// Python int or decimal/share-notation string.
Amount to_amount(const py::object& v) {
  if (py::isinstance<py::bool_>(v)) throw py::type_error("amount must be int or str");
  if (py::isinstance<py::int_>(v)) {
    if (v < py::int_(0)) fail(ErrorCode::invalid_argument, "amount must be non-negative");
    return parse_decimal(py::str(v).cast<std::string>());
  }
  if (py::isinstance<py::str>(v)) return parse_amount(v.cast<std::string>());
  throw py::type_error("amount must be int or str");
}

py::int_ from_amount(Amount a) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(to_decimal(a).c_str(), nullptr, 10));
}

py::dict event_dict(const Event& e) {
  py::dict args;
  for (const auto& [k, v] : e.args) args[py::str(k)] = v;
  py::dict d;
  d["sequence"] = e.sequence;
  d["emitter"] = e.emitter.hex();
  d["kind"] = std::string(to_string(e.kind));
  d["args"] = args;
  return d;
}

py::object failure_dict(const std::optional<sc::StepFailure>& f) {
  if (!f) return py::none();
  py::dict d;
  d["step"] = f->step;
  d["line"] = f->line;
  d["op"] = f->op;
  d["code"] = std::string(to_string(f->code));
  d["assertion"] = f->assertion;
  d["message"] = f->message;
  return d;
}

py::object percent(const std::optional<double>& p) {
  return p ? py::object(py::float_(*p)) : py::none();
}

py::dict report_dict(const cost::Report& r) {
  py::dict d;
  for (const cost::ReportRow* row : {&r.mint, &r.burn, &r.unlock, &r.lock}) {
    py::dict e;
    e["instances"] = row->instances;
    e["total"] = row->total;
    e["per_instance"] = row->per_instance();
    d[py::str(std::string(cost::to_string(row->kind)))] = e;
  }
  d["unlock_vs_mint"] = percent(r.unlock_vs_mint);
  d["lock_vs_burn"] = percent(r.lock_vs_burn);
  d["unlock_vs_mint_text"] = cost::format_percent(r.unlock_vs_mint);
  d["lock_vs_burn_text"] = cost::format_percent(r.lock_vs_burn);
  d["text"] = r.to_text();
  return d;
}

cost::Weights weights_from(const py::object& w) {
  if (w.is_none()) return cost::Weights::defaults();
  if (py::isinstance<py::dict>(w)) {
    auto json = py::module_::import("json").attr("dumps")(w).cast<std::string>();
    return sc::parse_weights(json, cost::Weights::defaults());
  }
  return sc::load_weights(w.cast<std::string>(), cost::Weights::defaults());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SFT-Lock spectrum securitization ledger";

  g_ledger_error = PyErr_NewException("sftlock._core.LedgerError", PyExc_RuntimeError, nullptr);
  m.add_object("LedgerError", py::handle(g_ledger_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LedgerError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(g_ledger_error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(g_ledger_error, exc.ptr());
    }
  });

  m.attr("UNIT") = from_amount(kUnit);

  py::class_<Address>(m, "Address")
      .def(py::init([](const std::string& hex) { return Address::from_hex(hex); }))
      .def_static("zero", &Address::zero)
      .def_static("from_index", &Address::from_index)
      .def_property_readonly("hex", &Address::hex)
      .def("is_zero", &Address::is_zero)
      .def("__str__", &Address::hex)
      .def("__repr__", [](const Address& a) { return "Address('" + a.hex() + "')"; })
      .def("__eq__", [](const Address& a, const Address& b) { return a == b; })
      .def("__hash__", [](const Address& a) { return std::hash<Address>{}(a); });
  py::implicitly_convertible<py::str, Address>();

  m.def("parse_amount", [](const std::string& s) { return from_amount(parse_amount(s)); },
        "Share notation ('0.3') or raw atto-shares to an int.");
  m.def("to_shares", [](const py::object& v) { return to_shares(to_amount(v)); });

  py::class_<Engine>(m, "Engine")
      .def(py::init([](const Address& sma) { return Engine({.sma = sma}); }), py::arg("sma"))
      .def("mint_nfst", &Engine::mint_nfst, py::arg("caller"), py::arg("to"),
           py::arg("channel"), py::arg("location"))
      .def("reclaim_nfst", &Engine::reclaim_nfst, py::arg("caller"), py::arg("token"))
      .def("stake_nfst", &Engine::stake_nfst, py::arg("pu"), py::arg("token"))
      .def("set_lock_order",
           [](Engine& e, const Address& c, const std::vector<TokenId>& ids) {
             e.set_lock_order(c, ids);
           },
           py::arg("caller"), py::arg("tokens"))
      .def("set_unlock_order",
           [](Engine& e, const Address& c, const std::vector<TokenId>& ids) {
             e.set_unlock_order(c, ids);
           },
           py::arg("caller"), py::arg("tokens"))
      .def("transfer",
           [](Engine& e, const Address& from, const Address& to, const Address& pu,
              const py::object& amount) { e.transfer(from, to, pu, to_amount(amount)); },
           py::arg("from_"), py::arg("to"), py::arg("pu"), py::arg("amount"))
      .def("mint_rnfst", &Engine::mint_rnfst, py::arg("pu"))
      .def("set_user", &Engine::set_user, py::arg("caller"), py::arg("token"),
           py::arg("user"), py::arg("expires"), py::arg("now"))
      .def("balance_of",
           [](const Engine& e, const Address& pu, const Address& h) {
             return from_amount(e.vault().balance_of(pu, h));
           })
      .def("share_of",
           [](const Engine& e, const Address& pu, const Address& h) {
             return e.vault().share_of(pu, h);
           })
      .def("locked_of", [](const Engine& e, const Address& pu) { return e.vault().locked_of(pu); })
      .def("unlocked_of",
           [](const Engine& e, const Address& pu) { return e.vault().unlocked_of(pu); })
      .def("lock_order", [](const Engine& e, const Address& pu) { return e.vault().lock_order(pu); })
      .def("unlock_order",
           [](const Engine& e, const Address& pu) { return e.vault().unlock_order(pu); })
      .def("origin_owner", [](const Engine& e, TokenId id) { return e.vault().origin_owner(id); })
      .def("user_of",
           [](const Engine& e, TokenId id, Timestamp now) { return e.rentals().user_of(id, now); })
      .def("events",
           [](const Engine& e) {
             py::list out;
             for (const auto& ev : e.journal().entries()) out.append(event_dict(ev));
             return out;
           })
      .def("journal_text", [](const Engine& e) { return e.journal().serialize(); })
      .def("digest", [](const Engine& e) { return to_hex(e.state().digest()); })
      .def("cost_total",
           [](const Engine& e, const std::string& kind) {
             for (int k = 0; k <= static_cast<int>(cost::OpKind::burn); ++k) {
               auto op = static_cast<cost::OpKind>(k);
               if (cost::to_string(op) == kind)
                 return py::make_tuple(e.costs().instances(op),
                                       e.costs().total(op, cost::Weights::defaults()));
             }
             throw py::value_error("unknown operation kind: " + kind);
           });

  m.def("replay_digest",
        [](const std::string& journal_text) {
          return to_hex(replay(Journal::parse(journal_text).entries()).digest());
        },
        "SHA-256 of the state rebuilt from a serialized journal.");

  m.def("trace",
        [](const std::string& journal_text, TokenId token) {
          py::list out;
          for (const auto& ev : trace(Journal::parse(journal_text).entries(), token))
            out.append(event_dict(ev));
          return out;
        });

  m.def("run_scenario",
        [](const std::string& path) {
          auto r = sc::run(sc::load(path));
          py::dict d;
          d["ok"] = r.ok();
          d["steps_executed"] = r.steps_executed;
          d["failure"] = failure_dict(r.failure);
          d["journal"] = r.engine.journal().serialize();
          d["digest"] = to_hex(r.engine.state().digest());
          return d;
        },
        py::arg("path"));

  m.def("compare_scenario",
        [](const std::string& path, const py::object& weights) {
          auto r = sc::compare(sc::load(path));
          py::dict d;
          d["completed"] = !r.failure.has_value();
          d["failure"] = failure_dict(r.failure);
          d["counts_equal"] = r.counts_equal();
          d["count_checks"] = r.checks.size();
          d["sft_ids_before"] = r.sft_ids_before;
          d["sft_ids_after"] = r.sft_ids_after;
          d["baseline_ids_before"] = r.baseline_ids_before;
          d["baseline_ids_after"] = r.baseline_ids_after;
          d["sft_identity_preserved"] = r.sft_identity_preserved();
          d["baseline_identity_preserved"] = r.baseline_identity_preserved();
          d["report"] = report_dict(r.report(weights_from(weights)));
          return d;
        },
        py::arg("path"), py::arg("weights") = py::none());

  m.def("report_from_totals",
        [](std::uint64_t mint, std::uint64_t burn, std::uint64_t unlock, std::uint64_t lock) {
          return report_dict(cost::report_from_totals(mint, burn, unlock, lock));
        },
        py::arg("mint"), py::arg("burn"), py::arg("unlock"), py::arg("lock"));

  py::class_<HybridLedger>(m, "HybridLedger")
      .def(py::init<>())
      .def("mint", [](HybridLedger& h, const Address& to, std::uint64_t units) {
        return h.hybrid_mint(to, units);
      })
      .def("transfer",
           [](HybridLedger& h, const Address& from, const Address& to, const py::object& amount) {
             h.hybrid_transfer(from, to, to_amount(amount));
           },
           py::arg("from_"), py::arg("to"), py::arg("amount"))
      .def("balance_of", [](const HybridLedger& h, const Address& a) {
        return from_amount(h.balance_of(a));
      })
      .def("held", &HybridLedger::held);
}
