#!/usr/bin/env python3
# Copyright 2026 The Webskill Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the scripted replay transcripts under data/replays/ and the gate
fixtures under data/fixtures/gate/.

Each transcript is keyed by (role, index); the generator walks the planned
episodes in task order and emits the policy, cleaner and inducer responses
the online runner will request. Run from the repository root:
python3 tools/fixtures/make_replays.py
"""

import json
import pathlib

from make_sites import ADDRESS, TERMS, count

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"
VOID = "None of these steps generalize into a reusable function."


class Step:
    def __init__(self, action, thought, clean, error=False):
        self.action, self.thought, self.clean, self.error = action, thought, clean, error

    def response(self):
        return f"{self.thought}\n```\n{self.action}\n```"


def q(s):
    return "'" + s.replace("\\", "\\\\").replace("'", "\\'") + "'"


def click(bid, thought, clean, error=False):
    return Step(f"click({q(bid)})", thought, clean, error)


def fill(bid, text, thought, clean):
    return Step(f"fill({q(bid)}, {q(text)})", thought, clean)


def select(bid, option, thought, clean):
    return Step(f"select_option({q(bid)}, {q(option)})", thought, clean)


def say(text, thought, clean):
    return Step(f"send_msg_to_user({q(text)})", thought, clean)


def call(name, *args, thought, clean, error=False):
    return Step(f"{name}({', '.join(q(a) for a in args)})", thought, clean, error)


def inducer(functions, query, rewrite):
    return (f"```python\n{functions.strip()}\n```\n\nInstruction: {query}\n"
            f"```python\n{rewrite.strip()}\n```\n")


class Plan:
    """One task: the episode, the inducer reply and the verification continuation."""

    def __init__(self, task_id, steps, induced=VOID, cont=None):
        self.task_id, self.steps, self.induced, self.cont = task_id, steps, induced, cont


def transcript(plans, mode, verify):
    entries, counters = [], {"policy": 0, "cleaner": 0, "inducer": 0}

    def push(role, text):
        entries.append({"role": role, "index": counters[role], "response": text})
        counters[role] += 1

    for p in plans:
        for s in p.steps:
            push("policy", s.response())
        if mode == "vanilla":
            continue
        for s in p.steps:
            if not s.error:
                push("cleaner", s.clean)
        push("inducer", p.induced)
        if verify and p.cont is not None:
            for s in p.cont:
                push("policy", s.response())
    return entries


def write_jsonl(path, records):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(json.dumps(r) + "\n" for r in records))


def write_replay(name, entries):
    write_jsonl(DATA / "replays" / f"{name}.jsonl", [{"schema": "webskill.replay", "version": 1}] + entries)


# ------------------------------------------------------------------ mini_shop

def search(name):
    return [fill("101", name, f"The search box at the top of the page is the quickest way to find the {name}, "
                 "so I type its name there.", f"Typed '{name}' into the search box."),
            click("102", "With the term typed in, I press the search button to list matching products.",
                  "Ran the product search.")]


def open_product(bid, label):
    return click(bid, f"The results list shows the {label}; I open its product page to see the details.",
                 f"Opened the {label} product page.")


def add_to_cart_click():
    return click("210", "This is the right product, so I press Add to Cart.", "Added the product to the cart.")


def done(text, clean="Reported the result to the user."):
    return say(text, "Everything the task asks for is done, so I report back to the user.", clean)


def address_steps(field, save, value, which):
    return [fill(field, value, f"The {which} address field is editable here, so I enter the new address into it.",
                 f"Entered the {which} address."),
            click(save, f"I save the {which} address so the change sticks.", f"Saved the {which} address.")]


def open_account():
    return click("110", "Addresses are managed from the account area, so I open My Account first.",
                 "Opened My Account.")


def category(bid, label, sort_bid="1553", option="Price"):
    return [click(bid, f"The {label} link in the header leads straight to that category.",
                  f"Opened the {label} category."),
            select(sort_bid, option, "To find the cheapest item I sort the listing by price.",
                   "Sorted the listing by price.")]


SEARCH_PRODUCT = '''
def search_product(name: str):
    """Search the catalog for a product name."""
    fill('101', name)
    click('102')
'''

ADD_PRODUCT_TO_CART = '''
def add_product_to_cart(name: str, product_bid: str):
    """Search for a product, open it and add it to the cart."""
    search_product(name)
    click(product_bid)
    click('210')
'''

ADD_TO_CART_FLAT = '''
def add_to_cart(name: str, product_bid: str):
    """Search for a product, open it and add it to the cart."""
    fill('101', name)
    click('102')
    click(product_bid)
    click('210')
'''

UPDATE_ADDRESS = '''
def update_address(field_bid: str, save_bid: str, address: str):
    """Fill one address field on the address book page and save it."""
    fill(field_bid, address)
    click(save_bid)
'''


def sort_by_listings(sort_bid, option):
    return f'''
def sort_by_listings(category_id: str):
    """Open a category and sort its listing by ascending price."""
    click(category_id)
    select_option('{sort_bid}', '{option}')
'''


SHOP_QUERY = {
    "shop-01": "What is the price of the Ceramic Coffee Mug?",
    "shop-02": "Add the Ceramic Coffee Mug to my cart.",
    "shop-04": f"Set my billing address to {ADDRESS}, then set my shipping address to the same address.",
    "shop-07": "What is the cheapest product in the Video Games category?",
}

CART_DONE = "I added it to your cart."


def shop_vanilla():
    return [
        Plan("shop-01", search("mug") + [open_product("p-mug", "Ceramic Coffee Mug"), done("12.99")]),
        Plan("shop-02", search("mug") + [open_product("p-mug", "Ceramic Coffee Mug"), add_to_cart_click(),
                                         done(CART_DONE)]),
        Plan("shop-03", search("coffee") + [open_product("p-coffee", "Colombian Ground Coffee"), add_to_cart_click(),
                                            done(CART_DONE)]),
        Plan("shop-04", [open_account()] + address_steps("401", "402", ADDRESS, "billing")
             + address_steps("403", "404", ADDRESS, "shipping") + [done("Both addresses are updated.")]),
        Plan("shop-05", search("headphone") + [open_product("p-headphone", "Wireless Over-Ear Headphone"),
                                               add_to_cart_click()]
             + search("bottle") + [open_product("p-bottle", "Insulated Water Bottle"), add_to_cart_click()]
             + search("notebook") + [open_product("p-notebook", "Spiral Notebook 3-Pack"), add_to_cart_click()]
             + [done("All three items are in your cart.")]),
        Plan("shop-06", [open_account()] + address_steps("403", "404", "7 Harbor Road, Portland", "shipping")
             + [done("Your shipping address is updated.")]),
        Plan("shop-07", category("120", "Video Games") + [done("Turbo Racer (PS4)")]),
        Plan("shop-08", category("121", "Office Products") + [done("Gel Pen Set")]),
    ]


def reuse(name, *args, what):
    return call(name, *args, thought=f"The {name} skill already does this, so I call it to {what}.",
                clean=f"Called {name} to {what}.")


def shop_asi():
    return [
        Plan("shop-01", search("mug") + [open_product("p-mug", "Ceramic Coffee Mug"), done("12.99")],
             inducer(SEARCH_PRODUCT, SHOP_QUERY["shop-01"],
                     "search_product('mug')\nclick('p-mug')\nsend_msg_to_user('12.99')"),
             [open_product("p-mug", "Ceramic Coffee Mug"), done("12.99")]),
        Plan("shop-02", [reuse("search_product", "mug", what="search for the mug"),
                         open_product("p-mug", "Ceramic Coffee Mug"), add_to_cart_click(), done(CART_DONE)],
             inducer(ADD_PRODUCT_TO_CART, SHOP_QUERY["shop-02"],
                     f"add_product_to_cart('mug', 'p-mug')\nsend_msg_to_user({q(CART_DONE)})"),
             [done(CART_DONE)]),
        Plan("shop-03", [reuse("add_product_to_cart", "coffee", "p-coffee", what="add the coffee to the cart"),
                         done(CART_DONE)]),
        Plan("shop-04", [open_account()] + address_steps("401", "402", ADDRESS, "billing")
             + address_steps("403", "404", ADDRESS, "shipping") + [done("Both addresses are updated.")],
             inducer(UPDATE_ADDRESS, SHOP_QUERY["shop-04"],
                     f"click('110')\nupdate_address('401', '402', {q(ADDRESS)})\n"
                     f"update_address('403', '404', {q(ADDRESS)})\nsend_msg_to_user('Both addresses are updated.')"),
             [done("Both addresses are updated.")]),
        Plan("shop-05", [reuse("add_product_to_cart", "headphone", "p-headphone", what="add the headphone"),
                         reuse("add_product_to_cart", "bottle", "p-bottle", what="add the water bottle"),
                         reuse("add_product_to_cart", "notebook", "p-notebook", what="add the notebook"),
                         done("All three items are in your cart.")]),
        Plan("shop-06", [open_account(),
                         reuse("update_address", "403", "404", "7 Harbor Road, Portland",
                               what="save the shipping address"),
                         done("Your shipping address is updated.")]),
        Plan("shop-07", category("120", "Video Games") + [done("Turbo Racer (PS4)")],
             inducer(sort_by_listings("1553", "Price"), SHOP_QUERY["shop-07"],
                     "sort_by_listings('120')\nsend_msg_to_user('Turbo Racer (PS4)')"),
             [done("Turbo Racer (PS4)")]),
        Plan("shop-08", [reuse("sort_by_listings", "121", what="open Office Products sorted by price"),
                         done("Gel Pen Set")]),
    ]


def shop_memory(verified):
    """Vanilla trajectories with self-contained inducer replies; memory modes keep the action space fixed."""
    plans = shop_vanilla()
    by_id = {p.task_id: p for p in plans}
    by_id["shop-01"].induced = inducer(SEARCH_PRODUCT, SHOP_QUERY["shop-01"],
                                       "search_product('mug')\nclick('p-mug')\nsend_msg_to_user('12.99')")
    by_id["shop-02"].induced = inducer(ADD_TO_CART_FLAT, SHOP_QUERY["shop-02"],
                                       f"add_to_cart('mug', 'p-mug')\nsend_msg_to_user({q(CART_DONE)})")
    by_id["shop-04"].induced = inducer(UPDATE_ADDRESS, SHOP_QUERY["shop-04"],
                                       f"click('110')\nupdate_address('401', '402', {q(ADDRESS)})\n"
                                       f"update_address('403', '404', {q(ADDRESS)})\n"
                                       "send_msg_to_user('Both addresses are updated.')")
    by_id["shop-07"].induced = inducer(sort_by_listings("1553", "Price"), SHOP_QUERY["shop-07"],
                                       "sort_by_listings('120')\nsend_msg_to_user('Turbo Racer (PS4)')")
    if verified:
        by_id["shop-01"].cont = [open_product("p-mug", "Ceramic Coffee Mug"), done("12.99")]
        by_id["shop-02"].cont = [done(CART_DONE)]
        by_id["shop-04"].cont = [done("Both addresses are updated.")]
        by_id["shop-07"].cont = [done("Turbo Racer (PS4)")]
    return plans


# --------------------------------------------------------------- mini_shop_v2

V2_SORT = "Price: Low to High"


def shop_v2(allow_update):
    def broken_sort(bid, label):
        return call("sort_by_listings", bid,
                    thought=f"sort_by_listings opens a category sorted by price, so I use it for {label}.",
                    clean=f"Called sort_by_listings for {label}.", error=True)

    def resort(label):
        return select("1560", V2_SORT, f"The skill failed on the sort box; this site's {label} listing has a "
                      "different sort control, so I pick the low-to-high price order directly.",
                      "Sorted the listing by price.")

    first = Plan("shopv2-01", [broken_sort("120", "Video Games"), resort("Video Games"), done("Turbo Racer (PS4)")],
                 inducer(sort_by_listings("1560", V2_SORT), "What is the cheapest product in the Video Games category?",
                         "sort_by_listings('120')\nsend_msg_to_user('Turbo Racer (PS4)')"),
                 [done("Turbo Racer (PS4)")] if allow_update else None)
    if allow_update:
        second = [reuse("sort_by_listings", "121", what="open Office Products sorted by price"), done("Gel Pen Set")]
    else:
        second = [broken_sort("121", "Office Products"), resort("Office Products"), done("Gel Pen Set")]
    return [
        first,
        Plan("shopv2-02", second),
        Plan("shopv2-03", [reuse("add_product_to_cart", "mug", "p-mug", what="add the mug to the cart"),
                           done(CART_DONE)]),
        Plan("shopv2-04", [reuse("add_product_to_cart", "pen", "p-pens", what="add the gel pens"),
                           reuse("add_product_to_cart", "stapler", "p-stapler", what="add the stapler"),
                           done("Both items are in your cart.")]),
        Plan("shopv2-05", [reuse("search_product", "bottle", what="search for the water bottle"),
                           open_product("p-bottle", "Insulated Water Bottle"), done("18.5")]),
        Plan("shopv2-06", [open_account(),
                           reuse("update_address", "401", "402", "9 Birch Lane, Dover", what="save the billing address"),
                           reuse("update_address", "403", "404", "3 Pine Court, Dover",
                                 what="save the shipping address"),
                           done("Both addresses are updated.")]),
    ]


# ----------------------------------------------------------------- mini_admin

OPEN_MARKETING_REVIEWS = (DATA / "skills" / "reference" / "open_marketing_reviews.py").read_text()
SEARCH_REVIEWS = (DATA / "skills" / "reference" / "search_reviews.py").read_text()

FIND_CUSTOMER = '''
def find_customer(keyword: str):
    """Open the customer grid and filter it by a keyword."""
    click('190')
    fill('1300', keyword)
    click('1301')
'''

TERM_REPORT = ", ".join(f"{t}: {count(t)}" for t in TERMS)


def reviews_nav():
    return [click("488", "The reviews live under the marketing menu, so I open it first.",
                  "Opened the Marketing menu."),
            click("493", "From the marketing page I go to the list of all reviews.", "Opened All Reviews.")]


def review_search(term):
    return [fill("757", term, f"I type '{term}' into the review search box to filter the grid.",
                 f"Typed '{term}' into the review search."),
            click("1239", "I run the search so the grid only shows matching reviews.", "Ran the review search.")]


def customer_search(phone, first=True):
    steps = [click("190", "Customers are listed under the CUSTOMERS menu, so I open it.",
                   "Opened the customer grid.")] if first else []
    return steps + [fill("1300", phone, f"I search the customer grid by the phone number {phone}.",
                         f"Typed {phone} into the customer search."),
                    click("1301", "Run the customer search.", "Ran the customer search.")]


def orders():
    return [click("183", "Orders are under the SALES menu, so I open the orders grid.", "Opened the orders grid.")]


def admin_vanilla():
    return [
        Plan("admin-01", reviews_nav() + review_search("satisfied") + [done("2")]),
        Plan("admin-02", reviews_nav() + review_search("disappointed") + [done("2")]),
        Plan("admin-03", reviews_nav() + review_search("decent") + [done("2")]),
        Plan("admin-04", reviews_nav() + sum((review_search(t) for t in TERMS), []) + [done(TERM_REPORT)]),
        Plan("admin-05", customer_search("555-0142") + [done("Ana Lopez")]),
        Plan("admin-06", customer_search("555-0178") + customer_search("555-0199", first=False)
             + [done("Bo Chen and Cara Diaz")]),
        Plan("admin-07", orders() + [done("3")]),
        Plan("admin-08", orders() + [done("Processing")]),
    ]


def admin_asi():
    def reviews(term):
        return [reuse("open_marketing_reviews", what="open the reviews grid"),
                reuse("search_reviews", "757", "1239", term, what=f"search the reviews for '{term}'")]

    plans = admin_vanilla()
    plans[0].induced = inducer(OPEN_MARKETING_REVIEWS + "\n" + SEARCH_REVIEWS,
                               "Count the reviews that mention the term 'satisfied'.",
                               "open_marketing_reviews()\nsearch_reviews('757', '1239', 'satisfied')\n"
                               "send_msg_to_user('2')")
    plans[0].cont = [done("2")]
    plans[1] = Plan("admin-02", reviews("disappointed") + [done("2")])
    plans[2] = Plan("admin-03", reviews("decent") + [done("2")])
    plans[3] = Plan("admin-04", [reuse("open_marketing_reviews", what="open the reviews grid")]
                    + [reuse("search_reviews", "757", "1239", t, what=f"search the reviews for '{t}'")
                       for t in TERMS] + [done(TERM_REPORT)])
    plans[4].induced = inducer(FIND_CUSTOMER, "What is the name of the customer whose phone number is 555-0142?",
                               "find_customer('555-0142')\nsend_msg_to_user('Ana Lopez')")
    plans[4].cont = [done("Ana Lopez")]
    plans[5] = Plan("admin-06", [reuse("find_customer", "555-0178", what="look up the first number"),
                                 reuse("find_customer", "555-0199", what="look up the second number"),
                                 done("Bo Chen and Cara Diaz")])
    return plans


# ---------------------------------------------------------------- gate cases

IDLE = '''
def idle():
    """Wait twice without touching the page."""
    noop()
    noop()
'''

OPEN_ACCOUNT = '''def open_account():
    """Open the address book by way of the cart."""
    click('111')
    click('110')
'''

IDLE_LIB = '''def idle_lib():
    """Wait twice without touching the page."""
    noop()
    noop()
'''


def gate_cases():
    """Eight candidates on shop-01, one per (correctness, usage, validity) combination."""
    full = search("mug") + [open_product("p-mug", "Ceramic Coffee Mug")]
    tail = [open_product("p-mug", "Ceramic Coffee Mug")]
    prefixes = {
        (True, True): ["search_product('mug')"],
        (True, False): ["search_product('mug')", "idle()"],
        (False, True): ["open_account()"],
        (False, False): ["idle_lib()"],
    }
    cases = {}
    for correct in (True, False):
        for usage in (True, False):
            for valid in (True, False):
                prefix = prefixes[(usage, valid)]
                cont = (tail if usage else full) + [done("12.99" if correct else "9.99")]
                name = "".join("T" if b else "F" for b in (correct, usage, valid))
                cases[name] = {
                    "candidate": {
                        "episode_id": "shop-01", "task_id": "shop-01", "query": SHOP_QUERY["shop-01"],
                        "skills": [SEARCH_PRODUCT.strip() + "\n", IDLE.strip() + "\n"],
                        "rewritten": prefix + ["send_msg_to_user('12.99')"], "prefix": prefix,
                    },
                    "replay": [{"role": "policy", "index": i, "response": s.response()} for i, s in enumerate(cont)],
                    "expected": {"correctness": correct, "skill_usage": usage, "skill_validity": valid,
                                 "committed": correct and usage and valid},
                }
    return cases


def write_gate():
    root = DATA / "fixtures" / "gate"
    library = [{"schema": "webskill.library", "version": 1, "namespace": "mini_shop", "imported_from": "",
                "clock": 2}]
    for i, src in enumerate([IDLE_LIB, OPEN_ACCOUNT]):
        name = src.split("(")[0].split()[1]
        library.append({"name": name, "params": [], "docstring": src.split('"""')[1], "status": "verified", "namespace": "mini_shop", "origin_episode": "",
                        "call_count": 0, "created_at": str(i + 1), "imported_from": "", "source": src})
    write_jsonl(root / "library.jsonl", library)
    for name, case in gate_cases().items():
        d = root / name
        d.mkdir(parents=True, exist_ok=True)
        (d / "candidate.json").write_text(json.dumps(case["candidate"], indent=2) + "\n")
        write_jsonl(d / "replay.jsonl", [{"schema": "webskill.replay", "version": 1}] + case["replay"])
        (d / "expected.json").write_text(json.dumps(case["expected"], indent=2) + "\n")


def main():
    write_replay("shop_vanilla", transcript(shop_vanilla(), "vanilla", False))
    write_replay("shop_asi", transcript(shop_asi(), "asi", True))
    write_replay("shop_memory_text_off", transcript(shop_memory(False), "memory_text", False))
    write_replay("shop_memory_text_on", transcript(shop_memory(True), "memory_text", True))
    write_replay("shop_memory_program_on", transcript(shop_memory(True), "memory_program", True))
    write_replay("shop_v2_update", transcript(shop_v2(True), "asi", True))
    write_replay("shop_v2_no_update", transcript(shop_v2(False), "asi", True))
    write_replay("admin_vanilla", transcript(admin_vanilla(), "vanilla", False))
    write_replay("admin_asi", transcript(admin_asi(), "asi", True))
    write_gate()


if __name__ == "__main__":
    main()
