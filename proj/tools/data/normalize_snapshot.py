#!/usr/bin/env python3
# Copyright 2026 The gridprint Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates data/*.csv from the 2016 eGRID / EIA JSON extracts.

Usage: normalize_snapshot.py <json-dir> <out-dir>

<json-dir> must hold energy-mix-us_2016.json, us-emissions_2016.json and
energy-mix-intl_2016.json (shipped in the Apache-2.0 `energyusage==0.0.13`
wheel under energyusage/data/json/).
"""

import json
import os
import sys

STATE_CODES = {
    "Alabama": "AL", "Alaska": "AK", "Arizona": "AZ", "Arkansas": "AR",
    "California": "CA", "Colorado": "CO", "Connecticut": "CT",
    "Delaware": "DE", "District Of Columbia": "DC", "Florida": "FL",
    "Georgia": "GA", "Hawaii": "HI", "Idaho": "ID", "Illinois": "IL",
    "Indiana": "IN", "Iowa": "IA", "Kansas": "KS", "Kentucky": "KY",
    "Louisiana": "LA", "Maine": "ME", "Maryland": "MD",
    "Massachusetts": "MA", "Michigan": "MI", "Minnesota": "MN",
    "Mississippi": "MS", "Missouri": "MO", "Montana": "MT",
    "Nebraska": "NE", "Nevada": "NV", "New Hampshire": "NH",
    "New Jersey": "NJ", "New Mexico": "NM", "New York": "NY",
    "North Carolina": "NC", "North Dakota": "ND", "Ohio": "OH",
    "Oklahoma": "OK", "Oregon": "OR", "Pennsylvania": "PA",
    "Rhode Island": "RI", "South Carolina": "SC", "South Dakota": "SD",
    "Tennessee": "TN", "Texas": "TX", "Utah": "UT", "Vermont": "VT",
    "Virginia": "VA", "Washington": "WA", "West Virginia": "WV",
    "Wisconsin": "WI", "Wyoming": "WY",
}

STATE_DISPLAY = {"District Of Columbia": "District of Columbia"}

# Per-fuel CO2 intensities (kg/MWh: coal, oil, gas) for the three states used
# to calibrate the fuel constants. The JSON extracts carry no per-fuel emission
# totals, so the kilotonne columns for these states are reconstructed as
# intensity * generation.
ANCHOR_INTENSITIES = {
    "West Virginia": (934.0, 735.0, 700.0),
    "Missouri": (975.0, 922.0, 528.0),
    "Wyoming": (1085.0, 798.0, 1009.0),
}

# EIA name -> (ISO 3166-1 alpha-2 or stable substitute, display name).
COUNTRIES = {
    "Afghanistan": ("AF", None), "Albania": ("AL", None),
    "Algeria": ("DZ", None), "American Samoa": ("AS", None),
    "Angola": ("AO", None), "Antarctica": ("AQ", None),
    "Antigua and Barbuda": ("AG", None), "Argentina": ("AR", None),
    "Armenia": ("AM", None), "Aruba": ("AW", None),
    "Australia": ("AU", None), "Austria": ("AT", None),
    "Azerbaijan": ("AZ", None), "Bahamas, The": ("BS", "Bahamas"),
    "Bahrain": ("BH", None), "Bangladesh": ("BD", None),
    "Barbados": ("BB", None), "Belarus": ("BY", None),
    "Belgium": ("BE", None), "Belize": ("BZ", None), "Benin": ("BJ", None),
    "Bermuda": ("BM", None), "Bhutan": ("BT", None),
    "Bolivia": ("BO", None), "Bosnia and Herzegovina": ("BA", None),
    "Botswana": ("BW", None), "Brazil": ("BR", None),
    "Brunei": ("BN", None), "Bulgaria": ("BG", None),
    "Burkina Faso": ("BF", None), "Burma (Myanmar)": ("MM", "Myanmar"),
    "Burundi": ("BI", None), "Cambodia": ("KH", None),
    "Cameroon": ("CM", None), "Canada": ("CA", None),
    "Cape Verde": ("CV", None), "Cayman Islands": ("KY", None),
    "Central African Republic": ("CF", None), "Chad": ("TD", None),
    "Chile": ("CL", None), "China": ("CN", None), "Colombia": ("CO", None),
    "Comoros": ("KM", None),
    "Congo (Brazzaville)": ("CG", "Congo (Brazzaville)"),
    "Congo (Kinshasa)": ("CD", "Congo (Kinshasa)"),
    "Cook Islands": ("CK", None), "Costa Rica": ("CR", None),
    "Cote dIvoire (IvoryCoast)": ("CI", "Cote d'Ivoire"),
    "Croatia": ("HR", None), "Cuba": ("CU", None), "Cyprus": ("CY", None),
    "Czech Republic": ("CZ", None), "Denmark": ("DK", None),
    "Djibouti": ("DJ", None), "Dominica": ("DM", None),
    "Dominican Republic": ("DO", None), "Ecuador": ("EC", None),
    "Egypt": ("EG", None), "El Salvador": ("SV", None),
    "Equatorial Guinea": ("GQ", None), "Eritrea": ("ER", None),
    "Estonia": ("EE", None), "Ethiopia": ("ET", None),
    "Falkland Islands (Islas Malvinas)": ("FK", "Falkland Islands"),
    "Faroe Islands": ("FO", None), "Fiji": ("FJ", None),
    "Finland": ("FI", None), "France": ("FR", None),
    "French Guiana": ("GF", None), "French Polynesia": ("PF", None),
    "Gabon": ("GA", None), "Gambia, The": ("GM", "Gambia"),
    "Georgia": ("GE", None), "Germany": ("DE", None), "Ghana": ("GH", None),
    "Gibraltar": ("GI", None), "Greece": ("GR", None),
    "Greenland": ("GL", None), "Grenada": ("GD", None),
    "Guadeloupe": ("GP", None), "Guam": ("GU", None),
    "Guatemala": ("GT", None), "Guinea": ("GN", None),
    "Guinea-Bissau": ("GW", None), "Guyana": ("GY", None),
    "Haiti": ("HT", None), "Honduras": ("HN", None),
    "Hong Kong": ("HK", None), "Hungary": ("HU", None),
    "Iceland": ("IS", None), "India": ("IN", None),
    "Indonesia": ("ID", None), "Iran": ("IR", None), "Iraq": ("IQ", None),
    "Ireland": ("IE", None), "Israel": ("IL", None), "Italy": ("IT", None),
    "Jamaica": ("JM", None), "Japan": ("JP", None), "Jordan": ("JO", None),
    "Kazakhstan": ("KZ", None), "Kenya": ("KE", None),
    "Kiribati": ("KI", None), "Korea, North": ("KP", "North Korea"),
    "Korea, South": ("KR", "South Korea"), "Kosovo": ("XK", None),
    "Kuwait": ("KW", None), "Kyrgyzstan": ("KG", None), "Laos": ("LA", None),
    "Latvia": ("LV", None), "Lebanon": ("LB", None), "Lesotho": ("LS", None),
    "Liberia": ("LR", None), "Libya": ("LY", None),
    "Lithuania": ("LT", None), "Luxembourg": ("LU", None),
    "Macau": ("MO", None), "Macedonia": ("MK", None),
    "Madagascar": ("MG", None), "Malawi": ("MW", None),
    "Malaysia": ("MY", None), "Maldives": ("MV", None), "Mali": ("ML", None),
    "Malta": ("MT", None), "Martinique": ("MQ", None),
    "Mauritania": ("MR", None), "Mauritius": ("MU", None),
    "Mexico": ("MX", None), "Moldova": ("MD", None),
    "Mongolia": ("MN", None), "Montenegro": ("ME", None),
    "Montserrat": ("MS", None), "Morocco": ("MA", None),
    "Mozambique": ("MZ", None), "Namibia": ("NA", None),
    "Nauru": ("NR", None), "Nepal": ("NP", None),
    "Netherlands": ("NL", None), "Netherlands Antilles": ("AN", None),
    "New Caledonia": ("NC", None), "New Zealand": ("NZ", None),
    "Nicaragua": ("NI", None), "Niger": ("NE", None),
    "Nigeria": ("NG", None), "Niue": ("NU", None), "Norway": ("NO", None),
    "Oman": ("OM", None), "Pakistan": ("PK", None),
    "Palestinian Territories": ("PS", None), "Panama": ("PA", None),
    "Papua New Guinea": ("PG", None), "Paraguay": ("PY", None),
    "Peru": ("PE", None), "Philippines": ("PH", None),
    "Poland": ("PL", None), "Portugal": ("PT", None),
    "Puerto Rico": ("PR", None), "Qatar": ("QA", None),
    "Reunion": ("RE", None), "Romania": ("RO", None),
    "Russia": ("RU", None), "Rwanda": ("RW", None),
    "Saint Helena": ("SH", None), "Saint Kitts and Nevis": ("KN", None),
    "Saint Lucia": ("LC", None), "Saint Pierre and Miquelon": ("PM", None),
    "Saint Vincent/Grenadines": ("VC", "Saint Vincent and the Grenadines"),
    "Samoa": ("WS", None), "Sao Tome and Principe": ("ST", None),
    "Saudi Arabia": ("SA", None), "Senegal": ("SN", None),
    "Serbia": ("RS", None), "Seychelles": ("SC", None),
    "Sierra Leone": ("SL", None), "Singapore": ("SG", None),
    "Slovakia": ("SK", None), "Slovenia": ("SI", None),
    "Solomon Islands": ("SB", None), "Somalia": ("SO", None),
    "South Africa": ("ZA", None), "South Sudan": ("SS", None),
    "Spain": ("ES", None), "Sri Lanka": ("LK", None), "Sudan": ("SD", None),
    "Suriname": ("SR", None), "Swaziland": ("SZ", None),
    "Sweden": ("SE", None), "Switzerland": ("CH", None),
    "Syria": ("SY", None), "Taiwan": ("TW", None),
    "Tajikistan": ("TJ", None), "Tanzania": ("TZ", None),
    "Thailand": ("TH", None), "Timor-Leste (East Timor)": ("TL", "Timor-Leste"),
    "Togo": ("TG", None), "Tonga": ("TO", None),
    "Trinidad and Tobago": ("TT", None), "Tunisia": ("TN", None),
    "Turkey": ("TR", None), "Turkmenistan": ("TM", None),
    "Turks and Caicos Islands": ("TC", None),
    "U.S. Pacific Islands": ("UM", None), "Uganda": ("UG", None),
    "Ukraine": ("UA", None), "United Arab Emirates": ("AE", None),
    "United Kingdom": ("GB", None), "United States": ("US", None),
    "Uruguay": ("UY", None), "Uzbekistan": ("UZ", None),
    "Vanuatu": ("VU", None), "Venezuela": ("VE", None),
    "Vietnam": ("VN", None),
    "Virgin Islands,  U.S.": ("VI", "U.S. Virgin Islands"),
    "Virgin Islands, British": ("VG", "British Virgin Islands"),
    "Wake Island": ("UM-79", None), "Western Sahara": ("EH", None),
    "Yemen": ("YE", None), "Zambia": ("ZM", None), "Zimbabwe": ("ZW", None),
}

# Broad definition, including the Caucasus, Kazakhstan and Turkey.
EUROPE = {
    "Albania", "Andorra", "Armenia", "Austria", "Azerbaijan", "Belarus",
    "Belgium", "Bosnia and Herzegovina", "Bulgaria", "Croatia", "Cyprus",
    "Czech Republic", "Denmark", "Estonia", "Finland", "France", "Georgia",
    "Germany", "Greece", "Hungary", "Iceland", "Ireland", "Italy",
    "Kazakhstan", "Kosovo", "Latvia", "Liechtenstein", "Lithuania",
    "Luxembourg", "Malta", "Moldova", "Monaco", "Montenegro", "Netherlands",
    "Macedonia", "Norway", "Poland", "Portugal", "Romania", "Russia",
    "San Marino", "Serbia", "Slovakia", "Slovenia", "Spain", "Sweden",
    "Switzerland", "Turkey", "Ukraine", "United Kingdom", "Vatican City",
}

EXCLUDED = {
    "Former Czechoslovakia", "Former Serbia and Montenegro",
    "Former U.S.S.R.", "Former Yugoslavia", "Hawaiian Trade Zone",
    "East Germany", "West Germany",
}


def fmt(x):
    return repr(float(x))


def state_mix(mix):
    """Returns (coal, oil, gas, low) fractions with otherFossil dropped."""
    low = sum(mix[k] for k in ("nuclear", "hydro", "biomass", "wind",
                               "solar", "geothermal", "unknown"))
    parts = [mix["coal"], mix["oil"], mix["gas"], low]
    denom = sum(parts)
    return [p / denom for p in parts]


def main(src, out):
    us = json.load(open(os.path.join(src, "energy-mix-us_2016.json")))
    rates = json.load(open(os.path.join(src, "us-emissions_2016.json")))
    intl = json.load(open(os.path.join(src, "energy-mix-intl_2016.json")))

    rows = []
    for name, code in sorted(STATE_CODES.items(), key=lambda kv: kv[1]):
        rec = us[name]
        gen = rec["netGeneration"]
        mix = state_mix(rec["mix"])
        fuel_gen = [gen * rec["mix"][k] / 100.0 for k in ("coal", "oil", "gas")]
        emit = ["", "", ""]
        if name in ANCHOR_INTENSITIES:
            emit = [fmt(i * g / 1e6) for i, g in
                    zip(ANCHOR_INTENSITIES[name], fuel_gen)]
        rows.append(",".join(
            [code, STATE_DISPLAY.get(name, name)] + [fmt(m) for m in mix] +
            [fmt(rates[name])] + [fmt(g) for g in fuel_gen] + emit))
    with open(os.path.join(out, "egrid_2016.csv"), "w") as f:
        f.write("state_id,state_name,coal_frac,oil_frac,gas_frac,"
                "lowcarbon_frac,output_rate_lbs_per_mwh,coal_gen_mwh,"
                "oil_gen_mwh,gas_gen_mwh,coal_emit_kt,oil_emit_kt,"
                "gas_emit_kt\n")
        f.write("\n".join(rows) + "\n")

    rows = []
    europe_totals = [0.0, 0.0, 0.0, 0.0]
    for name, rec in intl.items():
        if name == "_define" or name in EXCLUDED:
            continue
        total = rec["total"]
        if not total > 0:
            continue
        code, display = COUNTRIES[name]
        parts = [rec["coal"], rec["petroleum"], rec["naturalGas"],
                 rec["lowCarbon"]]
        is_europe = name in EUROPE
        if is_europe:
            europe_totals = [a + b for a, b in zip(europe_totals, parts)]
        rows.append((code, ",".join(
            [code, display or name, "1" if is_europe else "0"] +
            [fmt(p / total) for p in parts])))
    rows.sort()
    with open(os.path.join(out, "eia_2016.csv"), "w") as f:
        f.write("country_id,country_name,is_europe,coal_frac,oil_frac,"
                "gas_frac,lowcarbon_frac\n")
        f.write("\n".join(r for _, r in rows) + "\n")

    us_mix = state_mix(us["U.S."]["mix"])
    eu_sum = sum(europe_totals)
    eu_mix = [p / eu_sum for p in europe_totals]
    with open(os.path.join(out, "aggregates_2016.csv"), "w") as f:
        f.write("region_id,region_name,coal_frac,oil_frac,gas_frac,"
                "lowcarbon_frac,output_rate_lbs_per_mwh\n")
        f.write(",".join(["us-average", "United States average"] +
                         [fmt(m) for m in us_mix] + [fmt(rates["U.S."])]) + "\n")
        f.write(",".join(["europe-average", "Europe average"] +
                         [fmt(m) for m in eu_mix] + [""]) + "\n")
        f.write("world-average,World average,0.287,0.229,0.339,0.144,1600.6\n")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
