def search_product(name: str):
    click("Search textbox...")
    if has_popup_window():
        click("Close")
    fill("Search textbox", name)
    click("Search button")
