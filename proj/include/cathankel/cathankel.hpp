#pragma once

#include "cathankel/errors.hpp"
#include "cathankel/exact_ring.hpp"
#include "cathankel/sequences.hpp"
#include "cathankel/hankel.hpp"
#include "cathankel/closed_forms.hpp"
#include "cathankel/verify.hpp"
