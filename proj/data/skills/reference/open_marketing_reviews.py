def open_marketing_reviews():
    """Open the All Reviews page under the Marketing menu."""
    click('488')  # Marketing
    click('493')  # All Reviews
