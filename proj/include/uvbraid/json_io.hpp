#pragma once

#include <json.hpp>

#include "uvbraid/homs.hpp"
#include "uvbraid/oracle.hpp"
#include "uvbraid/perms.hpp"
#include "uvbraid/quotients.hpp"
#include "uvbraid/raag.hpp"
#include "uvbraid/semidirect.hpp"

namespace uvbraid::json_io {

using json = nlohmann::ordered_json;

/// One-line image array, 1-based.
json perm_images(const Perm &p);
Perm perm_from_json(const json &j);

json delta_tokens(std::span<const Delta> letters);
json normal_form(const UVNormalForm &nf);

/// {"n", "c", "m", "rho": [images...], "sigma": [[images per t] per i]}
json hom_spec(const HomSpec &h);
HomSpec hom_spec_from_json(const json &j);

json abel_image(const AbelImage &a);
json quotient_element(const FinQuotElem &x);
json proof(const ProofResult &r);

} // namespace uvbraid::json_io
