def search_reviews(search_box_id: str, search_button_id: str, search_term: str):
    """Search the reviews grid for a keyword.

    Args:
        search_box_id: ID of the review search textbox
        search_button_id: ID of the search button
        search_term: keyword to search for
    """
    click(search_box_id)
    fill(search_box_id, search_term)
    click(search_button_id)
