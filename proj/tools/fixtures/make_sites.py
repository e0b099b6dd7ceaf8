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
"""Writes the bundled site specs and task files under data/.

Run from the repository root: python3 tools/fixtures/make_sites.py
"""

import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def el(bid, role, name, **kw):
    e = {"bid": bid, "role": role, "name": name}
    e.update(kw)
    return e


def rule(bid, action, *effects, value=None):
    on = {"action": action}
    if bid:
        on["bid"] = bid
    if value is not None:
        on["value"] = value
    return {"on": on, "do": list(effects)}


def goto(url):
    return {"goto": url}


def set_flag(name, value):
    return {"set_flag": {"name": name, "value": value}}


def append_flag(name, value):
    return {"append_flag": {"name": name, "value": value}}


def emit(table, term):
    return {"emit_results": {"table": table, "term": term}}


def page(url, title, elements, rules=(), query=None):
    p = {"url": url, "title": title, "elements": elements, "rules": list(rules)}
    if query:
        p["dynamic_query"] = query
    return p


def cp(cid, kind, **kw):
    c = {"id": cid, "kind": kind}
    c.update(kw)
    return c


def msg(cid, *subs, mode="all"):
    return cp(cid, "message_contains", substrings=list(subs), mode=mode)


def task(site, tid, query, checkpoints, max_steps=None):
    t = {"task_id": tid, "site_id": site, "query": query, "checkpoints": checkpoints}
    if max_steps:
        t["max_steps"] = max_steps
    return t


# ---------------------------------------------------------------- mini_shop

PRODUCTS = [
    {"id": "p-mug", "name": "Ceramic Coffee Mug", "price": 12.99, "category": "kitchen"},
    {"id": "p-travel-mug", "name": "Steel Travel Mug", "price": 15, "category": "kitchen"},
    {"id": "p-coffee", "name": "Colombian Ground Coffee 12oz", "price": 9.49, "category": "grocery"},
    {"id": "p-headphone", "name": "Wireless Over-Ear Headphone", "price": 59.99, "category": "electronics"},
    {"id": "p-bottle", "name": "Insulated Water Bottle", "price": 18.5, "category": "kitchen"},
    {"id": "p-notebook", "name": "Spiral Notebook 3-Pack", "price": 7.25, "category": "office"},
    {"id": "p-pens", "name": "Gel Pen Set", "price": 5.99, "category": "office"},
    {"id": "p-stapler", "name": "Desktop Stapler", "price": 11.4, "category": "office"},
    {"id": "p-quest", "name": "Adventure Quest (Switch)", "price": 49.99, "category": "video_games"},
    {"id": "p-racer", "name": "Turbo Racer (PS4)", "price": 19.99, "category": "video_games"},
    {"id": "p-island", "name": "Puzzle Island (PS4)", "price": 24.5, "category": "video_games"},
]


def shop_site(v2=False):
    sort_bid = "1560" if v2 else "1553"
    sort_options = (["Position", "Price: Low to High", "Product Name"] if v2
                    else ["Relevance", "Price", "Name"])
    products = [dict(p) for p in PRODUCTS]

    def header():
        return [
            el("101", "textbox", "Search"),
            el("102", "button", "Search"),
            el("110", "link", "My Account"),
            el("111", "link", "My Cart"),
            el("120", "link", "Video Games"),
            el("121", "link", "Office Products"),
        ]

    def header_rules(here):
        rules = [
            rule("101", "click", {"open_popup": "newsletter"}),
            rule("102", "click", emit("products", "$101"), goto("/search")),
            rule("120", "click", set_flag("category", "video_games"), goto("/category")),
            rule("121", "click", set_flag("category", "office"), goto("/category")),
        ]
        if here != "/account/address":
            rules.append(rule("110", "click", goto("/account/address")))
        if here != "/cart":
            rules.append(rule("111", "click", goto("/cart")))
        return rules

    row_click = {"set_flag": "selected_product", "from_field": "id", "goto": "/product"}
    pages = [
        page("/", "One Stop Market", header() + [el("130", "statictext", "Welcome to One Stop Market")],
             header_rules("/")),
        page("/search", "Search results", header(), header_rules("/search"),
             {"table": "products", "filter_field": "name", "filter_term": "@results.products",
              "match": "substring", "label_fields": ["name", "price"], "bid_field": "id",
              "on_click": row_click}),
        page("/category", "Category", header() + [
            el(sort_bid, "combobox", "Sort By", options=sort_options)], header_rules("/category"),
             {"table": "products", "filter_field": "category", "filter_term": "@category",
              "match": "exact", "sort_field": "$" + sort_bid, "label_fields": ["name", "price"],
              "bid_field": "id", "on_click": row_click,
              **({"sort_aliases": {"Price: Low to High": "price", "Product Name": "name"}} if v2 else {})}),
        page("/product", "Product", header() + [el("210", "button", "Add to Cart")],
             header_rules("/product") + [rule("210", "click", append_flag("cart", "@selected_product"))],
             {"table": "products", "filter_field": "id", "filter_term": "@selected_product",
              "match": "exact", "label_fields": ["name", "price"], "bid_field": "id"}),
        page("/cart", "Shopping Cart", header() + [el("301", "statictext", "Cart items", flag="cart")],
             header_rules("/cart")),
        page("/account/address", "Address Book", header() + [
            el("401", "textbox", "Billing address"),
            el("402", "button", "Save billing address"),
            el("403", "textbox", "Shipping address"),
            el("404", "button", "Save shipping address"),
            el("405", "statictext", "Saved billing address", flag="billing_address"),
            el("406", "statictext", "Saved shipping address", flag="shipping_address"),
        ], header_rules("/account/address") + [
            rule("402", "click", set_flag("billing_address", "$401")),
            rule("404", "click", set_flag("shipping_address", "$403")),
        ]),
    ]
    return {
        "site_id": "mini_shop_v2" if v2 else "mini_shop",
        "start_url": "/",
        "data_tables": {"products": products},
        "pages": pages,
        "popups": [{
            "id": "newsletter", "title": "Sign up for our newsletter",
            "elements": [el("901", "button", "Close"), el("902", "textbox", "Email")],
            "rules": [rule("901", "click", {"close_popup": True}),
                      rule("", "keyboard_press", {"close_popup": True}, value="Escape")],
        }],
    }


ADDRESS = "42 Elm Street, Springfield"
SHOP_TASKS = [
    task("mini_shop", "shop-01", "What is the price of the Ceramic Coffee Mug?", [msg("price", "12.99")]),
    task("mini_shop", "shop-02", "Add the Ceramic Coffee Mug to my cart.",
         [cp("in-cart", "flag_list_contains", name="cart", value="p-mug")]),
    task("mini_shop", "shop-03", "Add the Colombian ground coffee to my cart.",
         [cp("in-cart", "flag_list_contains", name="cart", value="p-coffee")]),
    task("mini_shop", "shop-04", f"Set my billing address to {ADDRESS}, then set my shipping address to the same address.",
         [cp("billing", "flag_equals", name="billing_address", value=ADDRESS),
          cp("shipping", "flag_equals", name="shipping_address", value=ADDRESS)]),
    task("mini_shop", "shop-05", "Add a wireless headphone, a water bottle and a spiral notebook to my cart.",
         [cp("headphone", "flag_list_contains", name="cart", value="p-headphone"),
          cp("bottle", "flag_list_contains", name="cart", value="p-bottle"),
          cp("notebook", "flag_list_contains", name="cart", value="p-notebook")], max_steps=20),
    task("mini_shop", "shop-06", "Change my shipping address to 7 Harbor Road, Portland.",
         [cp("shipping", "flag_equals", name="shipping_address", value="7 Harbor Road, Portland")]),
    task("mini_shop", "shop-07", "What is the cheapest product in the Video Games category?",
         [msg("name", "Turbo Racer")]),
    task("mini_shop", "shop-08", "What is the cheapest item in the Office Products category?",
         [msg("name", "Gel Pen Set")]),
]

SHOP_V2_TASKS = [
    task("mini_shop_v2", "shopv2-01", "What is the cheapest product in the Video Games category?",
         [msg("name", "Turbo Racer")]),
    task("mini_shop_v2", "shopv2-02", "What is the cheapest item in the Office Products category?",
         [msg("name", "Gel Pen Set")]),
    task("mini_shop_v2", "shopv2-03", "Add the Ceramic Coffee Mug to my cart.",
         [cp("in-cart", "flag_list_contains", name="cart", value="p-mug")]),
    task("mini_shop_v2", "shopv2-04", "Add a gel pen set and a desktop stapler to my cart.",
         [cp("pens", "flag_list_contains", name="cart", value="p-pens"),
          cp("stapler", "flag_list_contains", name="cart", value="p-stapler")]),
    task("mini_shop_v2", "shopv2-05", "What is the price of the Insulated Water Bottle?", [msg("price", "18.5")]),
    task("mini_shop_v2", "shopv2-06", "Update my billing address to 9 Birch Lane, Dover and my shipping address to 3 Pine Court, Dover.",
         [cp("billing", "flag_equals", name="billing_address", value="9 Birch Lane, Dover"),
          cp("shipping", "flag_equals", name="shipping_address", value="3 Pine Court, Dover")]),
]

# --------------------------------------------------------------- mini_admin

REVIEWS = [
    ("r-101", "Zoe Tank", "Ana Lopez", "Very satisfied with the fit and the fabric.", 5),
    ("r-102", "Zoe Tank", "Bo Chen", "Runs small, order a size up.", 3),
    ("r-103", "Aero Jacket", "Cara Diaz", "Disappointed, the zipper broke after a week.", 1),
    ("r-104", "Aero Jacket", "Dev Patel", "Decent jacket for the price.", 4),
    ("r-105", "Luma Tee", "Eli Novak", "Comfortable and the color is exactly as pictured.", 5),
    ("r-106", "Luma Tee", "Fay Okafor", "Satisfied overall, but a little small.", 4),
    ("r-107", "Orion Pants", "Gus Berg", "Great quality, very comfortable.", 5),
    ("r-108", "Orion Pants", "Hana Ito", "Disappointed by the color, it looks faded.", 2),
    ("r-109", "Nova Hoodie", "Ivan Petrov", "Quality is decent for the price.", 3),
    ("r-110", "Nova Hoodie", "Jun Park", "Comfortable, warm and good quality.", 5),
    ("r-111", "Zoe Tank", "Kai Moreno", "The price was right and the color pops.", 4),
]

CUSTOMERS = [
    ("c-201", "Ana Lopez", "555-0142", "ana@example.com"),
    ("c-202", "Bo Chen", "555-0178", "bo@example.com"),
    ("c-203", "Cara Diaz", "555-0199", "cara@example.com"),
    ("c-204", "Dev Patel", "555-0110", "dev@example.com"),
    ("c-205", "Eli Novak", "555-0123", "eli@example.com"),
]

ORDERS = [
    ("000000170", "Ana Lopez", "Pending", 92.5),
    ("000000171", "Bo Chen", "Complete", 45),
    ("000000172", "Cara Diaz", "Pending", 120.25),
    ("000000173", "Dev Patel", "Processing", 33.1),
    ("000000174", "Eli Novak", "Pending", 78),
    ("000000175", "Ana Lopez", "Canceled", 19.99),
]


def admin_site():
    def nav():
        return [el("183", "link", "SALES"), el("190", "link", "CUSTOMERS"), el("488", "link", "MARKETING")]

    def nav_rules(here):
        targets = {"183": "/admin/sales/orders", "190": "/admin/customers", "488": "/admin/marketing"}
        return [rule(b, "click", goto(u)) for b, u in targets.items() if u != here]

    return {
        "site_id": "mini_admin",
        "start_url": "/admin",
        "data_tables": {
            "reviews": [{"id": r[0], "product": r[1], "nickname": r[2], "review": r[3], "rating": r[4]}
                        for r in REVIEWS],
            "customers": [{"id": c[0], "name": c[1], "phone": c[2], "email": c[3]} for c in CUSTOMERS],
            "orders": [{"id": o[0], "order": o[0], "customer": o[1], "status": o[2], "total": o[3]}
                       for o in ORDERS],
        },
        "pages": [
            page("/admin", "Dashboard", nav() + [el("150", "statictext", "Lifetime Sales $389.84")],
                 nav_rules("/admin")),
            page("/admin/marketing", "Marketing", nav() + [
                el("493", "link", "All Reviews"), el("494", "link", "Pending Reviews")],
                 nav_rules("/admin/marketing") + [
                     rule("493", "click", goto("/admin/reviews")),
                     rule("494", "click", goto("/admin/reviews/pending"))]),
            page("/admin/reviews", "Reviews", nav() + [
                el("757", "textbox", "Search reviews"), el("1239", "button", "Search")],
                 nav_rules("/admin/reviews") + [
                     rule("757", "click", set_flag("focus", "757")),
                     rule("1239", "click", emit("reviews", "$757"))],
                 {"table": "reviews", "filter_field": "review", "filter_term": "@results.reviews",
                  "match": "substring", "label_fields": ["product", "nickname", "review", "rating"],
                  "bid_field": "id"}),
            page("/admin/reviews/pending", "Pending Reviews", nav() + [
                el("760", "statictext", "We couldn't find any records.")], nav_rules("/admin/reviews/pending")),
            page("/admin/customers", "Customers", nav() + [
                el("1300", "textbox", "Search by keyword"), el("1301", "button", "Search")],
                 nav_rules("/admin/customers") + [rule("1301", "click", emit("customers", "$1300"))],
                 {"table": "customers", "filter_field": "phone", "filter_term": "@results.customers",
                  "match": "substring", "label_fields": ["name", "phone", "email"], "bid_field": "id"}),
            page("/admin/sales/orders", "Orders", nav() + [el("1400", "statictext", "Orders grid")],
                 nav_rules("/admin/sales/orders"),
                 {"table": "orders", "label_fields": ["order", "customer", "status", "total"],
                  "bid_field": "id"}),
        ],
    }


TERMS = ["comfortable", "small", "quality", "price", "color"]


def count(term):
    return sum(term in r[3].lower() for r in REVIEWS)


ADMIN_TASKS = [
    task("mini_admin", "admin-01", "Count the reviews that mention the term 'satisfied'.",
         [msg("count", "2")]),
    task("mini_admin", "admin-02", "How many reviews mention the term 'disappointed'?", [msg("count", "2")]),
    task("mini_admin", "admin-03", "How many reviews mention the term 'decent'?", [msg("count", "2")]),
    task("mini_admin", "admin-04",
         "Tell me the number of reviews that mention each of the terms " + ", ".join(f"'{t}'" for t in TERMS) + ".",
         [msg(t, f"{t}: {count(t)}") for t in TERMS], max_steps=20),
    task("mini_admin", "admin-05", "What is the name of the customer whose phone number is 555-0142?",
         [msg("name", "Ana Lopez")]),
    task("mini_admin", "admin-06", "Find the customers with phone numbers 555-0178 and 555-0199.",
         [msg("first", "Bo Chen"), msg("second", "Cara Diaz")]),
    task("mini_admin", "admin-07", "How many orders are currently pending?", [msg("count", "3")]),
    task("mini_admin", "admin-08", "What is the status of order 000000173?", [msg("status", "Processing")]),
]

# --------------------------------------------------------------- mini_forum

POSTS = [
    ("post-1", "books", "Best fantasy series of the decade", "quill", 88, 14),
    ("post-2", "books", "Short novels for a long flight", "pageturner", 41, 6),
    ("post-3", "books", "What are you reading this week?", "libby", 120, 52),
    ("post-4", "gaming", "Top 10 indie games", "pixel", 230, 31),
    ("post-5", "gaming", "Speedrun routes explained", "frames", 95, 12),
    ("post-6", "gaming", "Co-op games for couples", "duo", 150, 20),
    ("post-7", "travel", "Budget travel in Portugal", "nomad", 64, 9),
    ("post-8", "travel", "Night trains in Europe", "rails", 77, 17),
]


def forum_site():
    def nav():
        return [el("501", "link", "Forums"), el("502", "link", "Submit")]

    def nav_rules(here):
        rules = []
        if here != "/forums":
            rules.append(rule("501", "click", goto("/forums")))
        if here != "/submit":
            rules.append(rule("502", "click", goto("/submit")))
        return rules

    forums = ["books", "gaming", "travel"]
    return {
        "site_id": "mini_forum",
        "start_url": "/forums",
        "data_tables": {
            "posts": [{"id": p[0], "forum": p[1], "title": p[2], "author": p[3], "votes": p[4], "comments": p[5]}
                      for p in POSTS],
        },
        "pages": [
            page("/forums", "Forums", nav() + [el(f"f-{f}", "link", f) for f in forums],
                 nav_rules("/forums") + [rule(f"f-{f}", "click", set_flag("forum", f), goto("/f")) for f in forums]),
            page("/f", "Forum", nav() + [
                el("1700", "combobox", "Sort by", options=["Hot", "New", "Votes"]),
                el("710", "button", "Subscribe")],
                 nav_rules("/f") + [rule("710", "click", append_flag("subscriptions", "@forum"))],
                 {"table": "posts", "filter_field": "forum", "filter_term": "@forum", "match": "exact",
                  "sort_field": "$1700", "descending": True, "label_fields": ["title", "author", "votes"],
                  "bid_field": "id", "on_click": {"set_flag": "selected_post", "from_field": "id", "goto": "/post"}}),
            page("/post", "Submission", nav() + [
                el("620", "button", "Upvote"), el("621", "textbox", "Comment"), el("622", "button", "Post comment")],
                 nav_rules("/post") + [
                     rule("620", "click", append_flag("upvoted", "@selected_post")),
                     rule("622", "click", append_flag("comments", "$621"))],
                 {"table": "posts", "filter_field": "id", "filter_term": "@selected_post", "match": "exact",
                  "label_fields": ["title", "author", "votes", "comments"], "bid_field": "id"}),
            page("/submit", "Create submission", nav() + [
                el("801", "textbox", "Title"), el("802", "textbox", "Body"),
                el("803", "combobox", "Forum", options=forums), el("804", "button", "Create submission")],
                 nav_rules("/submit") + [
                     rule("804", "click", append_flag("submissions", "$801"), set_flag("submission_forum", "$803"))]),
        ],
    }


FORUM_TASKS = [
    task("mini_forum", "forum-01", "Which post in the gaming forum has the most votes?", [msg("title", "Top 10 indie games")]),
    task("mini_forum", "forum-02", "Upvote the post 'Best fantasy series of the decade'.",
         [cp("upvote", "flag_list_contains", name="upvoted", value="post-1")]),
    task("mini_forum", "forum-03", "Post in the books forum with the title 'Looking for sci-fi recommendations'.",
         [cp("title", "flag_list_contains", name="submissions", value="Looking for sci-fi recommendations"),
          cp("forum", "flag_equals", name="submission_forum", value="books")]),
    task("mini_forum", "forum-04", "Upvote the two posts with the most votes in the gaming forum.",
         [cp("first", "flag_list_contains", name="upvoted", value="post-4"),
          cp("second", "flag_list_contains", name="upvoted", value="post-6")]),
    task("mini_forum", "forum-05", "Reply 'Great list, thanks!' to the post 'Top 10 indie games'.",
         [cp("reply", "flag_list_contains", name="comments", value="Great list, thanks!"),
          cp("visited", "url_visited", url="/post")]),
    task("mini_forum", "forum-06", "How many comments does the post 'Budget travel in Portugal' have?", [msg("count", "9")]),
    task("mini_forum", "forum-07", "Subscribe to the books and travel forums.",
         [cp("books", "flag_list_contains", name="subscriptions", value="books"),
          cp("travel", "flag_list_contains", name="subscriptions", value="travel")]),
]

# -------------------------------------------------------------- mini_gitlab

REPOS = [
    ("repo-a11y", "a11y-syntax-highlighting", "byteblaze", 12, 3),
    ("repo-dots", "dotfiles", "byteblaze", 4, 0),
    ("repo-ui", "accessible-ui-kit", "primer", 58, 7),
    ("repo-cli", "gitlab-cli", "gitlab-org", 203, 41),
    ("repo-docs", "docs-site", "gitlab-org", 77, 12),
]

ISSUES = [
    ("iss-1", "repo-a11y", "Contrast too low in dark theme", "opened", "byteblaze"),
    ("iss-2", "repo-a11y", "Add screen reader labels", "opened", "alex"),
    ("iss-3", "repo-a11y", "Broken link in README", "closed", "byteblaze"),
    ("iss-4", "repo-ui", "Focus ring missing on buttons", "opened", "primer-bot"),
    ("iss-5", "repo-cli", "Crash on empty config", "opened", "sam"),
    ("iss-6", "repo-cli", "Support token refresh", "closed", "sam"),
]


def gitlab_site():
    def nav():
        return [el("1001", "textbox", "Search projects"), el("1002", "button", "Search")]

    def nav_rules():
        return [rule("1002", "click", emit("repos", "$1001"), goto("/projects"))]

    return {
        "site_id": "mini_gitlab",
        "start_url": "/dashboard",
        "data_tables": {
            "repos": [{"id": r[0], "name": r[1], "owner": r[2], "stars": r[3], "open_issues": r[4]} for r in REPOS],
            "issues": [{"id": i[0], "repo": i[1], "title": i[2], "state": i[3], "assignee": i[4]} for i in ISSUES],
        },
        "pages": [
            page("/dashboard", "Projects - Dashboard", nav() + [el("1005", "statictext", "Welcome to GitLab")], nav_rules()),
            page("/projects", "Search results", nav() + [
                el("1050", "combobox", "Sort", options=["Name", "Stars"])], nav_rules(),
                 {"table": "repos", "filter_field": "name", "filter_term": "@results.repos", "match": "substring",
                  "sort_field": "$1050", "descending": False, "label_fields": ["owner", "name", "stars"],
                  "bid_field": "id", "on_click": {"set_flag": "selected_repo", "from_field": "id", "goto": "/repo"}}),
            page("/repo", "Project overview", nav() + [
                el("1101", "button", "Star"), el("1102", "link", "Issues"), el("1103", "link", "Members")],
                 nav_rules() + [
                     rule("1101", "click", append_flag("starred", "@selected_repo")),
                     rule("1102", "click", goto("/issues")),
                     rule("1103", "click", goto("/members"))],
                 {"table": "repos", "filter_field": "id", "filter_term": "@selected_repo", "match": "exact",
                  "label_fields": ["name", "stars", "open_issues"], "bid_field": "id"}),
            page("/issues", "Issues", nav() + [el("1201", "link", "New issue")],
                 nav_rules() + [rule("1201", "click", goto("/issues/new"))],
                 {"table": "issues", "filter_field": "repo", "filter_term": "@selected_repo", "match": "exact",
                  "label_fields": ["title", "state", "assignee"], "bid_field": "id"}),
            page("/issues/new", "New issue", nav() + [
                el("1210", "textbox", "Title"), el("1211", "button", "Create issue")],
                 nav_rules() + [rule("1211", "click", append_flag("created_issues", "$1210"), goto("/issues"))]),
            page("/members", "Project members", nav() + [
                el("1301", "textbox", "Username"),
                el("1302", "combobox", "Role", options=["Guest", "Reporter", "Developer", "Maintainer"]),
                el("1303", "button", "Invite")],
                 nav_rules() + [rule("1303", "click", append_flag("members", "$1301"), set_flag("invited_role", "$1302"))]),
        ],
    }


GITLAB_TASKS = [
    task("mini_gitlab", "gitlab-01", "Star the accessible-ui-kit project.",
         [cp("star", "flag_list_contains", name="starred", value="repo-ui")]),
    task("mini_gitlab", "gitlab-02", "How many open issues does a11y-syntax-highlighting have?", [msg("count", "3")]),
    task("mini_gitlab", "gitlab-03", "Create an issue titled 'Add keyboard shortcuts' in the dotfiles project.",
         [cp("created", "flag_list_contains", name="created_issues", value="Add keyboard shortcuts"),
          cp("visited", "url_visited", url="/issues/new")]),
    task("mini_gitlab", "gitlab-04", "Invite abisubramanya27 to the gitlab-cli project as a Developer.",
         [cp("member", "flag_list_contains", name="members", value="abisubramanya27"),
          cp("role", "flag_equals", name="invited_role", value="Developer")]),
    task("mini_gitlab", "gitlab-05", "Star the gitlab-cli, docs-site and dotfiles projects.",
         [cp("cli", "flag_list_contains", name="starred", value="repo-cli"),
          cp("docs", "flag_list_contains", name="starred", value="repo-docs"),
          cp("dots", "flag_list_contains", name="starred", value="repo-dots")]),
    task("mini_gitlab", "gitlab-06",
         "Which of byteblaze's projects has more stars, a11y-syntax-highlighting or dotfiles?",
         [msg("name", "a11y-syntax-highlighting")]),
]

# ----------------------------------------------------------------- mini_map

PLACES = [
    ("pl-cmu", "Carnegie Mellon University", "Pittsburgh", "university", "40.4433, -79.9436"),
    ("pl-pitt", "University of Pittsburgh", "Pittsburgh", "university", "40.4444, -79.9608"),
    ("pl-phipps", "Phipps Conservatory", "Pittsburgh", "garden", "40.4390, -79.9470"),
    ("pl-pnc", "PNC Park", "Pittsburgh", "stadium", "40.4469, -80.0057"),
    ("pl-airport", "Pittsburgh International Airport", "Pittsburgh", "airport", "40.4915, -80.2329"),
]

ROUTES = [
    ("rt-1", "Carnegie Mellon University", "University of Pittsburgh", "Car", 5),
    ("rt-2", "Carnegie Mellon University", "University of Pittsburgh", "Foot", 22),
    ("rt-3", "Carnegie Mellon University", "Phipps Conservatory", "Foot", 9),
    ("rt-4", "Carnegie Mellon University", "PNC Park", "Car", 17),
    ("rt-5", "Carnegie Mellon University", "Pittsburgh International Airport", "Car", 31),
    ("rt-6", "PNC Park", "Pittsburgh International Airport", "Car", 26),
]


def map_site():
    def nav():
        return [el("1501", "textbox", "Search"), el("1502", "button", "Go"), el("1503", "link", "Directions")]

    def nav_rules(here):
        rules = [rule("1502", "click", emit("places", "$1501"), goto("/map/search"))]
        if here != "/map/directions":
            rules.append(rule("1503", "click", goto("/map/directions")))
        return rules

    return {
        "site_id": "mini_map",
        "start_url": "/map",
        "data_tables": {
            "places": [{"id": p[0], "name": p[1], "city": p[2], "kind": p[3], "coordinates": p[4]} for p in PLACES],
            "routes": [{"id": r[0], "from": r[1], "to": r[2], "mode": r[3], "minutes": r[4]} for r in ROUTES],
        },
        "pages": [
            page("/map", "OpenStreetMap", nav(), nav_rules("/map")),
            page("/map/search", "Search results", nav(), nav_rules("/map/search"),
                 {"table": "places", "filter_field": "name", "filter_term": "@results.places", "match": "substring",
                  "label_fields": ["name", "city"], "bid_field": "id",
                  "on_click": {"set_flag": "selected_place", "from_field": "id", "goto": "/map/place"}}),
            page("/map/place", "Place", nav() + [el("1510", "button", "Directions from here")],
                 nav_rules("/map/place") + [rule("1510", "click", set_flag("directions_from", "@selected_place"),
                                                 goto("/map/directions"))],
                 {"table": "places", "filter_field": "id", "filter_term": "@selected_place", "match": "exact",
                  "label_fields": ["name", "kind", "coordinates"], "bid_field": "id"}),
            page("/map/directions", "Directions", nav() + [
                el("1601", "textbox", "From"), el("1602", "textbox", "To"),
                el("1603", "combobox", "Mode", options=["Car", "Bike", "Foot"]), el("1604", "button", "Go")],
                 nav_rules("/map/directions") + [
                     rule("1604", "click", set_flag("route_from", "$1601"), set_flag("route_to", "$1602"),
                          set_flag("route_mode", "$1603"), emit("routes", "$1601"))],
                 {"table": "routes", "filter_field": "from", "filter_term": "@results.routes", "match": "exact",
                  "label_fields": ["to", "mode", "minutes"], "bid_field": "id"}),
        ],
    }


MAP_TASKS = [
    task("mini_map", "map-01", "What are the coordinates of Phipps Conservatory?", [msg("coords", "40.4390")]),
    task("mini_map", "map-02", "How many minutes does it take to drive from Carnegie Mellon University to PNC Park?",
         [msg("minutes", "17")]),
    task("mini_map", "map-03", "Show walking directions from Carnegie Mellon University to Phipps Conservatory.",
         [cp("from", "flag_equals", name="route_from", value="Carnegie Mellon University"),
          cp("to", "flag_equals", name="route_to", value="Phipps Conservatory"),
          cp("mode", "flag_equals", name="route_mode", value="Foot")]),
    task("mini_map", "map-04", "Which is faster from Carnegie Mellon University: walking to Phipps Conservatory or walking to the University of Pittsburgh?",
         [msg("answer", "Phipps Conservatory")]),
    task("mini_map", "map-05", "What kind of place is PNC Park, and what are its coordinates?",
         [msg("kind", "stadium"), msg("coords", "40.4469")]),
    task("mini_map", "map-06", "Find the driving time from PNC Park to the airport and from Carnegie Mellon University to the airport.",
         [msg("pnc", "26"), msg("cmu", "31")]),
]


def write(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=2) + "\n")


def main():
    sites = {"mini_shop": shop_site(), "mini_shop_v2": shop_site(v2=True), "mini_admin": admin_site(),
             "mini_forum": forum_site(), "mini_gitlab": gitlab_site(), "mini_map": map_site()}
    tasks = {"mini_shop": SHOP_TASKS, "mini_shop_v2": SHOP_V2_TASKS, "mini_admin": ADMIN_TASKS,
             "mini_forum": FORUM_TASKS, "mini_gitlab": GITLAB_TASKS, "mini_map": MAP_TASKS}
    for name, spec in sites.items():
        write(DATA / "sites" / f"{name}.json", spec)
        write(DATA / "tasks" / f"{name}.json", tasks[name])


if __name__ == "__main__":
    main()
