"""Deterministic synthetic corpus generator.

Emits a seed document (creators, platform accounts, content items) that
the server's seed endpoint ingests directly. All randomness flows from a
single seeded PRNG and all timestamps derive from a fixed base date, so
a given seed always produces a byte-identical file.

Shape of the corpus: 10 creators spread over five verticals, 1-3
platform accounts each, 8-15 content items each. Follower counts are
log-uniform in [500, 500000]; engagement rates uniform in
[0.005, 0.12]. Bodies are assembled from per-vertical phrase banks so
semantic search has real texture to rank against.
"""

import argparse
import hashlib
import json
import math
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Any

from scp.models import PLATFORMS, VERTICALS, to_iso

BASE_DATE = datetime(2025, 6, 1, tzinfo=timezone.utc)

FIRST_NAMES = [
    "Ana", "Bram", "Chioma", "Diego", "Elif", "Freya", "Goro", "Hana",
    "Ivo", "June", "Kofi", "Lena", "Mateo", "Nadia", "Omar", "Priya",
]
LAST_NAMES = [
    "Alvarez", "Bakker", "Castellanos", "Demir", "Eriksen", "Fontaine",
    "Gupta", "Haraldsen", "Ibarra", "Jansen", "Kaur", "Lindqvist",
    "Moreau", "Novak", "Okafor", "Petrova",
]

PHRASES: dict[str, dict[str, list[str]]] = {
    "travel": {
        "topics": [
            "budget travel", "street food tour", "night trains", "hidden beaches",
            "solo backpacking", "visa tips", "mountain trekking", "city walks",
        ],
        "subjects": [
            "Lisbon", "Oaxaca", "Hanoi", "Tbilisi", "the Atlas mountains",
            "Sri Lanka", "the Baltic coast", "Kyushu", "Patagonia", "Sarajevo",
        ],
        "sentences": [
            "I spent three weeks crossing {subject} on local buses and slow ferries.",
            "The best meal of the trip cost less than two dollars at a market stall in {subject}.",
            "Shoulder season in {subject} means empty trails and half-price guesthouses.",
            "My full packing list for {subject} fits in a 32 liter bag.",
            "Night trains remain the most underrated way to see {subject}.",
            "Here is how I booked the whole {subject} route without a single flight.",
            "A stranger's tip in a hostel kitchen completely changed my {subject} itinerary.",
        ],
        "bio": "Slow travel writer documenting {subject} one bus ride at a time.",
        "titles": [
            "A field guide to {subject}", "Two weeks in {subject} on a shoestring",
            "What nobody tells you about {subject}", "The honest cost of {subject}",
        ],
    },
    "food": {
        "topics": [
            "noodle soups", "sourdough baking", "fermentation", "market cooking",
            "regional recipes", "knife skills", "street snacks", "home pickling",
        ],
        "subjects": [
            "hand-pulled noodles", "misir wot", "khachapuri", "birria tacos",
            "laksa", "cacio e pepe", "jollof rice", "pho ga", "mapo tofu",
        ],
        "sentences": [
            "The trick to proper {subject} is patience with the heat, not fancy equipment.",
            "I tested five methods for {subject} and only one survived a weeknight.",
            "My grandmother's approach to {subject} starts with toasting the spices whole.",
            "Restaurant {subject} relies on a step most recipes quietly skip.",
            "You can ferment the base for {subject} on a kitchen counter in four days.",
            "Cheap cuts make the best {subject} if you respect the resting time.",
            "I asked three street vendors how they balance their {subject} and they all said the same thing.",
        ],
        "bio": "Recipe developer obsessed with {subject} and honest weeknight cooking.",
        "titles": [
            "The only {subject} method I trust", "Why your {subject} keeps failing",
            "{subject}, tested five ways", "Market notes: {subject}",
        ],
    },
    "technology": {
        "topics": [
            "open source", "local-first software", "rust tooling", "homelab",
            "privacy engineering", "developer workflows", "retro computing", "edge computing",
        ],
        "subjects": [
            "a static site generator", "an e-ink dashboard", "a mesh network",
            "a keyboard firmware", "a self-hosted photo archive", "a tiny CI runner",
            "an offline-first notes app", "a solar-powered server",
        ],
        "sentences": [
            "I rebuilt {subject} from scratch to understand where the complexity actually lives.",
            "Benchmarks for {subject} are meaningless without the failure modes next to them.",
            "Running {subject} for a year taught me more than any tutorial.",
            "The whole of {subject} fits in 400 lines if you refuse three features.",
            "Most guides to {subject} skip the part where the hardware misbehaves.",
            "Here is the maintenance log from a year of operating {subject} at home.",
            "I profiled {subject} until the slowest path was the network, as it should be.",
        ],
        "bio": "Software tinkerer writing long-form notes on {subject} and small systems.",
        "titles": [
            "A year with {subject}", "Building {subject} the boring way",
            "{subject}: a postmortem", "Notes on operating {subject}",
        ],
    },
    "journalism": {
        "topics": [
            "local politics", "public records", "investigative methods", "court reporting",
            "data journalism", "housing policy", "municipal budgets", "press freedom",
        ],
        "subjects": [
            "the county water board", "a shuttered hospital chain", "transit funding",
            "eviction filings", "the police oversight panel", "school district audits",
            "a zoning variance ring", "ambulance response times",
        ],
        "sentences": [
            "Records obtained this week show {subject} diverged sharply from public statements.",
            "Three officials with direct knowledge of {subject} agreed to speak on the record.",
            "The paper trail on {subject} runs through two shell companies and a storage unit.",
            "A six month review of {subject} found gaps the agency could not explain.",
            "Residents first flagged {subject} at a council meeting nobody covered.",
            "The data behind {subject} is public; assembling it took four months of requests.",
            "Follow-up filings confirm our earlier reporting on {subject}.",
        ],
        "bio": "Independent reporter covering {subject} with documents, not vibes.",
        "titles": [
            "What the records show about {subject}", "Inside {subject}",
            "{subject}: the paper trail", "Six months on {subject}",
        ],
    },
    "fashion": {
        "topics": [
            "slow fashion", "vintage sourcing", "capsule wardrobes", "textile repair",
            "menswear tailoring", "secondhand markets", "natural dyes", "costume history",
        ],
        "subjects": [
            "a 1970s field jacket", "deadstock denim", "hand-rolled hems",
            "a thrifted wool coat", "visible mending", "indigo dye vats",
            "a capsule of nine pieces", "flea market silk",
        ],
        "sentences": [
            "I tracked {subject} through four owners before it reached my rack.",
            "The construction on {subject} tells you exactly which decade it left the factory.",
            "Repairing {subject} cost less than shipping and will outlast anything new.",
            "Everything I wore this month came from {subject} and two repairs.",
            "A tailor taught me to read the seams on {subject} before buying.",
            "The dye bath for {subject} took a week and the color is worth every day.",
            "Resale prices for {subject} doubled, and the quality story explains why.",
        ],
        "bio": "Secondhand stylist writing about {subject} and clothes that last.",
        "titles": [
            "Reading the seams: {subject}", "A month of {subject}",
            "The case for {subject}", "{subject}, mended",
        ],
    },
}


def _pick_verticals(rng: random.Random, index: int) -> list[str]:
    primary = VERTICALS[index % len(VERTICALS)]
    if rng.random() < 0.4:
        secondary = rng.choice([v for v in VERTICALS if v != primary])
        return [primary, secondary]
    return [primary]


def _log_uniform_followers(rng: random.Random) -> int:
    lo, hi = math.log10(500), math.log10(500000)
    value = int(round(10 ** rng.uniform(lo, hi)))
    return max(500, min(500000, value))


def _sentence(rng: random.Random, bank: dict[str, list[str]]) -> str:
    template = rng.choice(bank["sentences"])
    return template.format(subject=rng.choice(bank["subjects"]))


def generate_corpus(seed: int = 42) -> dict[str, Any]:
    """Build the full seed document for one PRNG seed."""
    rng = random.Random(seed)
    creators: list[dict[str, Any]] = []
    accounts: list[dict[str, Any]] = []
    items: list[dict[str, Any]] = []
    content_counter = 0

    for index in range(10):
        creator_id = f"cid-{index + 1:03d}"
        verticals = _pick_verticals(rng, index)
        bank = PHRASES[verticals[0]]
        name = f"{rng.choice(FIRST_NAMES)} {rng.choice(LAST_NAMES)}"
        created_at = BASE_DATE - timedelta(days=rng.randint(400, 3000))
        creators.append(
            {
                "creator_id": creator_id,
                "display_name": name,
                "bio": bank["bio"].format(subject=rng.choice(bank["subjects"])),
                "verticals": verticals,
                "consent_status": "active",
                "created_at": to_iso(created_at),
            }
        )

        n_accounts = rng.randint(1, 3)
        platforms = rng.sample(PLATFORMS, n_accounts)
        handle_base = name.lower().replace(" ", ".")
        for platform in platforms:
            accounts.append(
                {
                    "creator_id": creator_id,
                    "platform": platform,
                    "handle": f"{handle_base}.{platform[:2]}",
                    "follower_count": _log_uniform_followers(rng),
                    "engagement_rate": round(rng.uniform(0.005, 0.12), 4),
                    "account_created_at": to_iso(
                        created_at + timedelta(days=rng.randint(0, 200))
                    ),
                    "posts_per_week": round(rng.uniform(0.5, 12.0), 1),
                }
            )

        # Regular posters get a tight cadence, irregular ones a jittery one;
        # both feed the consistency factor with distinguishable data.
        n_items = rng.randint(8, 15)
        regular = rng.random() < 0.5
        cadence = rng.randint(3, 14)
        published = BASE_DATE - timedelta(days=rng.randint(1, 10))
        for _ in range(n_items):
            content_counter += 1
            item_vertical = rng.choice(verticals)
            item_bank = PHRASES[item_vertical]
            title = rng.choice(item_bank["titles"]).format(
                subject=rng.choice(item_bank["subjects"])
            )
            body = " ".join(
                _sentence(rng, item_bank) for _ in range(rng.randint(3, 7))
            )
            topics = rng.sample(item_bank["topics"], rng.randint(2, 4))
            items.append(
                {
                    "content_id": f"cnt-{content_counter:03d}",
                    "creator_id": creator_id,
                    "platform": rng.choice(platforms),
                    "title": title,
                    "body": body,
                    "topics": topics,
                    "published_at": to_iso(published),
                    "content_hash": hashlib.sha256(body.encode("utf-8")).hexdigest(),
                    "size_bytes": len(body.encode("utf-8")),
                }
            )
            if regular:
                gap = cadence + rng.randint(-1, 1)
            else:
                gap = rng.randint(1, 45)
            published -= timedelta(days=max(1, gap), hours=rng.randint(0, 23))

    return {
        "creators": creators,
        "platform_accounts": accounts,
        "content_items": items,
    }


def write_corpus(path: str | Path, seed: int = 42) -> dict[str, Any]:
    """Generate and write a corpus file; returns the document."""
    doc = generate_corpus(seed)
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return doc


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="scp-datagen", description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--out", default="seed_data.json")
    args = parser.parse_args(argv)
    doc = write_corpus(args.out, args.seed)
    print(
        f"wrote {args.out}: {len(doc['creators'])} creators, "
        f"{len(doc['platform_accounts'])} accounts, "
        f"{len(doc['content_items'])} content items"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
